#include "braidwalk/walk.hpp"

#include "braidwalk/parallel.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace braidwalk {

namespace {

/// Cumulative letter probabilities in alphabet order; the final slot is hold.
class StepSampler {
 public:
  explicit StepSampler(const StepDistribution& dist) {
    double acc = 0;
    for (const Rational& w : dist.weights) {
      acc += to_double(w);
      cumulative_.push_back(acc);
    }
    cumulative_.push_back(1.0);
    if (dist.hold == 0) {
      // Rounding must not leave a sliver of holding mass.
      std::size_t last = dist.weights.size();
      while (last > 0 && dist.weights[last - 1] == 0) --last;
      for (std::size_t k = last == 0 ? 0 : last - 1; k < cumulative_.size(); ++k) cumulative_[k] = 1.0;
    }
  }

  /// Letter index, or letter_count() for a holding step.
  std::size_t draw(Xoshiro256& rng) const {
    const double u = rng.uniform();
    std::size_t k = 0;
    while (u >= cumulative_[k]) ++k;
    return k;
  }

  std::size_t letter_count() const { return cumulative_.size() - 1; }

 private:
  std::vector<double> cumulative_;
};

std::size_t inverse_letter(const ConcreteGroup& group, std::size_t k) {
  const Letter letter = group.alphabet()[k];
  if (group.is_involution(letter.generator)) return k;
  return letter.sign > 0 ? k + 1 : k - 1;
}

}  // namespace

StepDistribution uniform_step_distribution(const ConcreteGroup& group, const Rational& hold) {
  if (hold < 0 || hold >= 1) throw InvalidSpec("holding probability must lie in [0, 1)");
  StepDistribution dist;
  dist.hold = hold;
  const auto letters = group.alphabet().size();
  dist.weights.assign(letters, (Rational(1) - hold) / static_cast<long long>(letters));
  return dist;
}

StepDistribution weighted_step_distribution(const ConcreteGroup& group, const std::vector<Rational>& generator_weights,
                                            const Rational& hold) {
  if (hold < 0 || hold >= 1) throw InvalidSpec("holding probability must lie in [0, 1)");
  if (generator_weights.size() != static_cast<std::size_t>(group.generator_count()))
    throw InvalidSpec("expected one weight per generator");
  Rational mass = 0;
  for (std::size_t k = 0; k < group.alphabet().size(); ++k) {
    const Rational& w = generator_weights[static_cast<std::size_t>(group.alphabet()[k].generator)];
    if (w < 0) throw InvalidSpec("generator weights must be non-negative");
    mass += w;
  }
  if (mass == 0) throw InvalidSpec("at least one generator needs positive weight");
  StepDistribution dist;
  dist.hold = hold;
  for (const Letter& letter : group.alphabet()) {
    dist.weights.push_back(generator_weights[static_cast<std::size_t>(letter.generator)] * (Rational(1) - hold) / mass);
  }
  return dist;
}

void validate(const StepDistribution& dist, const ConcreteGroup& group) {
  if (dist.weights.size() != group.alphabet().size())
    throw InvalidSpec("step distribution does not match the group's alphabet");
  if (dist.hold < 0 || dist.hold >= 1) throw InvalidSpec("holding probability must lie in [0, 1)");
  Rational total = dist.hold;
  for (std::size_t k = 0; k < dist.weights.size(); ++k) {
    if (dist.weights[k] < 0) throw InvalidSpec("negative step probability");
    if (dist.weights[k] != dist.weights[inverse_letter(group, k)])
      throw InvalidSpec("asymmetric step distribution: weight of a letter differs from its inverse");
    total += dist.weights[k];
  }
  if (total != 1) throw InvalidSpec("step probabilities do not sum to 1");
}

bool is_doubly_stochastic(const CayleyGraph& graph, const StepDistribution& dist) {
  if (graph.size() > kExactLawCap) throw CapExceeded("doubly stochastic check limited to 5000 vertices");
  const std::size_t n = graph.size();
  std::vector<Rational> column(n, dist.hold);
  for (std::size_t v = 0; v < n; ++v) {
    Rational row = dist.hold;
    for (std::size_t k = 0; k < graph.letter_count(); ++k) {
      row += dist.weight(k);
      column[graph.neighbor(v, k)] += dist.weight(k);
    }
    if (row != 1) return false;
  }
  for (const Rational& c : column)
    if (c != 1) return false;
  return true;
}

WalkResult simulate(const CayleyGraph& graph, const StepDistribution& dist, std::int64_t steps, std::uint64_t seed,
                    const Functional& f, bool record_visits) {
  if (steps < 0) throw InvalidSpec("steps must be non-negative");
  validate(dist, graph.group());
  const StepSampler sampler(dist);
  const std::vector<double> values = f.tabulate(graph);
  const bool alternating = dist.hold == 0 && graph.bipartite();

  WalkResult result;
  result.steps = steps;
  result.seed = seed;
  result.samples.reserve(static_cast<std::size_t>(steps) + 1);
  if (record_visits) result.visited.reserve(static_cast<std::size_t>(steps) + 1);

  Xoshiro256 rng(seed);
  std::size_t state = 0;
  result.samples.push_back(values[state]);
  if (record_visits) result.visited.push_back(0);
  for (std::int64_t i = 0; i < steps; ++i) {
    const std::size_t k = sampler.draw(rng);
    if (k == sampler.letter_count()) {
      // hold
    } else {
      const std::size_t next = graph.neighbor(state, k);
      if (alternating && (graph.distance(next) - graph.distance(state)) % 2 == 0)
        throw std::logic_error("walk left its parity class on a bipartite Cayley graph");
      state = next;
    }
    result.samples.push_back(values[state]);
    if (record_visits) result.visited.push_back(static_cast<std::uint32_t>(state));
  }
  return result;
}

bool parity_split_applies(const Presentation& presentation, const StepDistribution& dist) {
  return !has_odd_relator(presentation) && dist.hold == 0;
}

LimitValue limiting_expectation(const CayleyGraph& graph, const Presentation& presentation, const Functional& f) {
  const ParitySums sums = parity_sums(graph, f);
  const auto order = static_cast<long long>(graph.size());
  if (has_odd_relator(presentation)) return LimitValue::single(sums.total / order);
  return LimitValue::parity_split(2 * sums.even / order, 2 * sums.odd / order);
}

LimitValue limiting_expectation(const CayleyGraph& graph, const Presentation& presentation,
                                const StepDistribution& dist, const Functional& f) {
  if (dist.hold > 0) {
    const ParitySums sums = parity_sums(graph, f);
    return LimitValue::single(sums.total / static_cast<long long>(graph.size()));
  }
  return limiting_expectation(graph, presentation, f);
}

std::vector<double> limit_law(const CayleyGraph& graph, bool parity_split, std::int64_t step) {
  std::vector<double> law(graph.size(), 0.0);
  if (!parity_split) {
    std::fill(law.begin(), law.end(), 1.0 / static_cast<double>(graph.size()));
    return law;
  }
  const int parity = static_cast<int>(step % 2);
  std::size_t members = 0;
  for (std::size_t v = 0; v < graph.size(); ++v) members += graph.distance(v) % 2 == parity;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.distance(v) % 2 == parity) law[v] = 1.0 / static_cast<double>(members);
  }
  return law;
}

namespace {

/// One application of the transition operator to a law on the vertices.
class TransitionOperator {
 public:
  TransitionOperator(const CayleyGraph& graph, const StepDistribution& dist) : graph_(graph), hold_(to_double(dist.hold)) {
    for (const Rational& w : dist.weights) weights_.push_back(to_double(w));
  }

  void advance(std::vector<double>& law) {
    next_.assign(law.size(), 0.0);
    for (std::size_t v = 0; v < law.size(); ++v) next_[v] = hold_ * law[v];
    for (std::size_t v = 0; v < law.size(); ++v) {
      if (law[v] == 0.0) continue;
      const auto row = graph_.neighbors(v);
      for (std::size_t k = 0; k < row.size(); ++k) next_[row[k]] += weights_[k] * law[v];
    }
    law.swap(next_);
  }

 private:
  const CayleyGraph& graph_;
  double hold_;
  std::vector<double> weights_;
  std::vector<double> next_;
};

}  // namespace

std::vector<double> exact_law(const CayleyGraph& graph, const StepDistribution& dist, std::int64_t steps) {
  if (graph.size() > kExactLawCap) throw CapExceeded("exact laws are limited to 5000 vertices");
  validate(dist, graph.group());
  TransitionOperator op(graph, dist);
  std::vector<double> law(graph.size(), 0.0);
  law[0] = 1.0;
  for (std::int64_t i = 0; i < steps; ++i) op.advance(law);
  return law;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InvalidSpec("total variation of laws on different supports");
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

EmpiricalReport empirical_vs_limit(const CayleyGraph& graph, const Presentation& presentation,
                                   const StepDistribution& dist, const Functional& f, std::int64_t steps,
                                   std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw InvalidSpec("trials must be at least 1");
  if (steps < 0) throw InvalidSpec("steps must be non-negative");
  validate(dist, graph.group());

  const StepSampler sampler(dist);
  const std::int64_t first = std::max<std::int64_t>(0, steps - 1);
  const std::int64_t last = steps + 1;
  const auto recorded = static_cast<std::size_t>(last - first + 1);

  // finals[r * trials + i] = vertex of trial i at step first + r
  std::vector<std::uint32_t> finals(recorded * trials);
  parallel_chunks(static_cast<std::size_t>(trials), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Xoshiro256 rng(trial_seed(seed, i));
      std::size_t state = 0;
      for (std::int64_t n = 0; n <= last; ++n) {
        if (n > 0) {
          const std::size_t k = sampler.draw(rng);
          if (k != sampler.letter_count()) state = graph.neighbor(state, k);
        }
        if (n >= first) finals[static_cast<std::size_t>(n - first) * trials + i] = static_cast<std::uint32_t>(state);
      }
    }
  });

  const std::vector<double> values = f.tabulate(graph);
  const bool split = parity_split_applies(presentation, dist);
  const LimitValue limit = limiting_expectation(graph, presentation, dist, f);
  const bool exact_available = graph.size() <= kExactLawCap;

  EmpiricalReport report;
  report.trials = trials;
  report.seed = seed;
  std::vector<double> exact;
  std::optional<TransitionOperator> op;
  if (exact_available) {
    exact = exact_law(graph, dist, first);
    op.emplace(graph, dist);
  }

  for (std::size_t r = 0; r < recorded; ++r) {
    const std::int64_t step = first + static_cast<std::int64_t>(r);
    std::vector<std::uint64_t> counts(graph.size(), 0);
    for (std::size_t i = 0; i < trials; ++i) ++counts[finals[r * trials + i]];

    double sum = 0;
    double sum_sq = 0;
    std::vector<double> empirical(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) {
      const auto c = static_cast<double>(counts[v]);
      sum += c * values[v];
      sum_sq += c * values[v] * values[v];
      empirical[v] = c / static_cast<double>(trials);
    }
    const auto n = static_cast<double>(trials);
    const double mean = sum / n;
    const double variance = trials > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
    const std::vector<double> law = limit_law(graph, split, step);

    EmpiricalRow row;
    row.step = step;
    row.parity = split ? (step % 2 == 0 ? "even" : "odd") : "all";
    row.empirical_mean = mean;
    row.standard_error = std::sqrt(variance / n);
    row.exact_limit = limit.at_parity(step);
    row.tv_distance = total_variation(empirical, law);
    if (exact_available) {
      if (r > 0) op->advance(exact);
      row.exact_tv = total_variation(exact, law);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace braidwalk
