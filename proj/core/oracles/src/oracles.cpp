#include "braidwalk/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace braidwalk::oracle {

std::vector<Perm> permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int inversions(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

int cycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return count;
}

namespace {

Perm identity(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Polygon flags (i, side) of a regular m-gon, stored as 2i + side.
Perm flag_map(int m, const std::function<std::pair<int, int>(int, int)>& f) {
  Perm p(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    for (int side = 0; side < 2; ++side) {
      const auto [j, t] = f(i, side);
      p[static_cast<std::size_t>(2 * i + side)] = 2 * (((j % m) + m) % m) + t;
    }
  }
  return p;
}

// Signed points ±1..±n stored as 0..2n-1: +k -> k-1, -k -> n+k-1.
int signed_point(int value, int n) { return value > 0 ? value - 1 : n - value - 1; }

Perm signed_map(int n, const std::function<int(int)>& f) {
  Perm p(static_cast<std::size_t>(2 * n));
  for (int k = 1; k <= n; ++k) {
    p[static_cast<std::size_t>(signed_point(k, n))] = signed_point(f(k), n);
    p[static_cast<std::size_t>(signed_point(-k, n))] = signed_point(-f(k), n);
  }
  return p;
}

int swap_value(int k, int a, int b) {
  if (k == a) return b;
  if (k == b) return a;
  return k;
}

std::vector<Perm> disjoint_union(const std::vector<std::vector<Perm>>& blocks) {
  std::vector<int> sizes;
  for (const auto& gens : blocks) sizes.push_back(static_cast<int>(gens.front().size()));
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<Perm> out;
  int offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const Perm& g : blocks[b]) {
      Perm p = identity(total);
      for (std::size_t i = 0; i < g.size(); ++i) p[static_cast<std::size_t>(offset) + i] = offset + g[i];
      out.push_back(std::move(p));
    }
    offset += sizes[b];
  }
  return out;
}

}  // namespace

std::vector<Perm> point_generators(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Cyclic: {
      const int m = spec.parameter;
      Perm a(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = (i + 1) % m;
      return {a};
    }
    case Family::CyclicProduct: {
      std::vector<std::vector<Perm>> blocks;
      for (int m : spec.moduli) blocks.push_back(point_generators(GroupSpec::cyclic(m)));
      return disjoint_union(blocks);
    }
    case Family::Dihedral: {
      const int m = spec.parameter;
      return {flag_map(m, [](int i, int s) { return std::pair{i + 1, s}; }),
              flag_map(m, [](int i, int s) { return std::pair{-i, 1 - s}; })};
    }
    case Family::CoxeterI2: {
      const int m = spec.parameter;
      return {flag_map(m, [](int i, int s) { return std::pair{-i, 1 - s}; }),
              flag_map(m, [](int i, int s) { return std::pair{1 - i, 1 - s}; })};
    }
    case Family::CoxeterA: {
      const int n = spec.parameter;
      std::vector<Perm> gens;
      for (int i = 0; i < n; ++i) {
        Perm p = identity(n + 1);
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
        gens.push_back(p);
      }
      return gens;
    }
    case Family::CoxeterB:
    case Family::CoxeterD: {
      const int n = spec.parameter;
      std::vector<Perm> gens;
      for (int i = 1; i < n; ++i) gens.push_back(signed_map(n, [i](int k) { return swap_value(k, i, i + 1); }));
      if (spec.family == Family::CoxeterB) {
        gens.push_back(signed_map(n, [n](int k) { return k == n ? -n : k; }));
      } else {
        gens.push_back(signed_map(n, [n](int k) {
          if (k == n) return -(n - 1);
          if (k == n - 1) return -n;
          return k;
        }));
      }
      return gens;
    }
    case Family::CoxeterProduct: {
      std::vector<std::vector<Perm>> blocks;
      for (const GroupSpec& f : spec.factors) blocks.push_back(point_generators(f));
      return disjoint_union(blocks);
    }
  }
  throw std::logic_error("unhandled family");
}

std::map<Perm, int> word_lengths(const std::vector<Perm>& generators) {
  std::vector<Perm> steps = generators;
  for (const Perm& g : generators) {
    Perm inv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) inv[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
    steps.push_back(inv);
  }
  const Perm start = identity(static_cast<int>(generators.front().size()));
  std::map<Perm, int> length{{start, 0}};
  std::deque<Perm> queue{start};
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    const int d = length.at(x);
    for (const Perm& s : steps) {
      Perm y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[static_cast<std::size_t>(s[i])];
      if (length.emplace(y, d + 1).second) queue.push_back(std::move(y));
    }
  }
  return length;
}

std::vector<BigInt> length_histogram(const GroupSpec& spec) {
  std::vector<BigInt> counts;
  for (const auto& [element, l] : word_lengths(point_generators(spec))) {
    if (counts.size() <= static_cast<std::size_t>(l)) counts.resize(static_cast<std::size_t>(l) + 1, 0);
    ++counts[static_cast<std::size_t>(l)];
  }
  return counts;
}

Rational parity_class_average_length(const std::vector<BigInt>& histogram, int parity) {
  BigInt members = 0;
  BigInt sum = 0;
  for (std::size_t l = static_cast<std::size_t>(parity); l < histogram.size(); l += 2) {
    members += histogram[l];
    sum += histogram[l] * l;
  }
  if (members == 0) throw std::logic_error("empty parity class");
  return Rational(sum, members);
}

Rational cyclic_average_length(int m) {
  long long sum = 0;
  for (int r = 0; r < m; ++r) sum += std::min(r, m - r);
  return Rational(sum, m);
}

BigInt kappa_by_tuples(int n, int j, int k) {
  BigInt count = 0;
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    if (std::accumulate(tuple.begin(), tuple.end(), 0) == n) ++count;
    std::size_t i = 0;
    while (i < tuple.size() && ++tuple[i] == j) tuple[i++] = 0;
    if (i == tuple.size()) break;
  }
  return count;
}

BigInt kappa_inclusion_exclusion(long long n, long long j, long long k) {
  if (k == 0) return n == 0 ? 1 : 0;
  BigInt sum = 0;
  for (long long m = 0; m <= k && n - m * j >= 0; ++m) {
    const BigInt term = binomial(k, m) * binomial(n - m * j + k - 1, k - 1);
    sum += m % 2 == 0 ? term : BigInt(-term);
  }
  return sum;
}

Rational true_length_probability_by_tuples(int n, int N, int target) {
  std::vector<int> even_lengths;
  for (const Perm& p : permutations(n)) {
    if (inversions(p) % 2 == 0) even_lengths.push_back(inversions(p));
  }
  const auto size = even_lengths.size();
  BigInt hits = 0;
  BigInt total = 0;
  std::vector<std::size_t> tuple(static_cast<std::size_t>(N), 0);
  while (true) {
    int sum = 0;
    for (std::size_t i : tuple) sum += even_lengths[i];
    ++total;
    if (sum == target) ++hits;
    std::size_t i = 0;
    while (i < tuple.size() && ++tuple[i] == size) tuple[i++] = 0;
    if (i == tuple.size()) break;
  }
  return Rational(hits, total);
}

std::vector<double> dense_chain_law(const CayleyGraph& graph, const StepDistribution& dist, long long steps) {
  const std::size_t n = graph.size();
  std::vector<double> matrix(n * n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    matrix[v * n + v] += to_double(dist.hold);
    for (std::size_t k = 0; k < graph.letter_count(); ++k) matrix[v * n + graph.neighbor(v, k)] += to_double(dist.weight(k));
  }
  std::vector<double> law(n, 0.0);
  law[0] = 1.0;
  std::vector<double> next(n);
  for (long long s = 0; s < steps; ++s) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < n; ++u) {
      if (law[u] == 0.0) continue;
      for (std::size_t v = 0; v < n; ++v) next[v] += law[u] * matrix[u * n + v];
    }
    law.swap(next);
  }
  return law;
}

}  // namespace braidwalk::oracle
