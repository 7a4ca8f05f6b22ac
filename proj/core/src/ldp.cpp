#include "braidwalk/ldp.hpp"

#include "braidwalk/cayley.hpp"
#include "braidwalk/error.hpp"
#include "braidwalk/limits.hpp"
#include "braidwalk/parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace braidwalk {

BigInt kappa_exact(long long n, long long j, long long k) {
  if (n < 0 || k < 0) return 0;
  if (j < 1) return n == 0 && k == 0 ? 1 : 0;
  if (n > (j - 1) * k) return 0;

  // ways[s] = number of i-tuples with sum s, for the current i
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
  std::vector<BigInt> next(ways.size());
  ways[0] = 1;
  long long reach = 0;
  for (long long i = 0; i < k; ++i) {
    const long long new_reach = std::min(n, reach + j - 1);
    BigInt window = 0;  // Σ ways[s-j+1 .. s]
    for (long long s = 0; s <= new_reach; ++s) {
      if (s <= reach) window += ways[static_cast<std::size_t>(s)];
      if (s - j >= 0 && s - j <= reach) window -= ways[static_cast<std::size_t>(s - j)];
      next[static_cast<std::size_t>(s)] = window;
    }
    reach = new_reach;
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

long long max_half_length(int n) { return static_cast<long long>(n) * (n - 1) / 4; }

long double kappa_asymptotic_log(long double x, long long M, long long N) {
  if (!(x > 0.0L && x < static_cast<long double>(M)))
    throw DomainError("restricted-composition asymptotic needs 0 < x < M");
  const long double upper = static_cast<long double>(M) + 1.0L - x;  // M + 1 - x
  const long double lower = static_cast<long double>(M) - x;         // M - x
  const auto n = static_cast<long double>(N);
  return -0.5L * std::log(2.0L * std::numbers::pi_v<long double> * n) + (n * upper + 0.5L) * std::log(upper) -
         (n * lower + 1.5L) * std::log(lower) - n * std::pow(lower / upper, static_cast<long double>(M + 1));
}

long double rate_function(const Rational& x, int n) {
  if (n < 3) throw InvalidSpec("the rate function needs n >= 3");
  const long long M = max_half_length(n);
  if (x < 0 || x > M) return std::numeric_limits<long double>::infinity();
  const long double upper = to_long_double(Rational(M + 1) - x);
  const long double lower = to_long_double(Rational(M) - x);
  auto x_log_x = [](long double v) { return v == 0.0L ? 0.0L : v * std::log(v); };
  const long double first = std::pow(1.0L - 1.0L / upper, static_cast<long double>(M + 1));
  return first + x_log_x(lower) - x_log_x(upper) + log_of(factorial(static_cast<unsigned>(n)) / 2);
}

// ---------------------------------------------------------------------------

BigInt LengthHistogram::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

LengthHistogram even_length_histogram(int n, int max_n) {
  if (n < 2) throw InvalidSpec("even_length_histogram needs n >= 2");
  if (n > max_n) throw CapExceeded("S_" + std::to_string(n) + " exceeds the enumeration cap n <= " + std::to_string(max_n));

  const CayleyGraph graph = build_cayley(GroupSpec::coxeter_a(n - 1));
  LengthHistogram enumerated{n, std::vector<BigInt>(static_cast<std::size_t>(graph.max_distance()) + 1, 0)};
  for (int d : graph.distances())
    if (d % 2 == 0) ++enumerated.counts[static_cast<std::size_t>(d)];

  std::vector<int> degrees;
  for (int d = 2; d <= n; ++d) degrees.push_back(d);
  const IntPolynomial poincare = poincare_polynomial(degrees);
  LengthHistogram from_polynomial{n, std::vector<BigInt>(poincare.coefficients().size(), 0)};
  for (std::size_t l = 0; l < poincare.coefficients().size(); l += 2) from_polynomial.counts[l] = poincare.coefficient(l);

  for (auto* h : {&enumerated, &from_polynomial})
    while (h->counts.size() > 1 && h->counts.back() == 0) h->counts.pop_back();
  if (enumerated.counts != from_polynomial.counts)
    throw std::logic_error("even length histogram of S_" + std::to_string(n) + " disagrees with its Poincaré polynomial");
  return enumerated;
}

std::string to_string(ProbabilityModel model) {
  return model == ProbabilityModel::Composition ? "composition" : "true_length";
}

Rational exact_probability(ProbabilityModel model, long long N, long long target, int n) {
  if (N < 0) throw InvalidSpec("N must be non-negative");
  if (n < 2) throw InvalidSpec("n must be at least 2");
  if (target % 2 != 0) throw InvalidSpec("target length must be even");
  if (target < 0) return 0;
  const long long half = target / 2;
  const BigInt even_count = factorial(static_cast<unsigned>(n)) / 2;

  if (model == ProbabilityModel::Composition) {
    const long long M = max_half_length(n);
    return Rational(kappa_exact(half, M + 1, N), boost::multiprecision::pow(even_count, static_cast<unsigned>(N)));
  }

  const LengthHistogram histogram = even_length_histogram(n);
  std::vector<BigInt> halves;
  for (std::size_t l = 0; l < histogram.counts.size(); l += 2) halves.push_back(histogram.counts[l]);
  const IntPolynomial step(halves);
  if (half > static_cast<long long>(halves.size() - 1) * N) return 0;

  // Coefficient `half` of step^N by binary powering, truncated at `half`.
  auto truncated = [half](const IntPolynomial& p) {
    auto c = p.coefficients();
    if (c.size() > static_cast<std::size_t>(half) + 1) c.resize(static_cast<std::size_t>(half) + 1);
    return IntPolynomial(std::move(c));
  };
  IntPolynomial result({1});
  IntPolynomial base = truncated(step);
  for (long long e = N; e > 0; e >>= 1) {
    if (e & 1) result = truncated(result * base);
    if (e > 1) base = truncated(base * base);
  }
  return Rational(result.coefficient(static_cast<std::size_t>(half)),
                  boost::multiprecision::pow(even_count, static_cast<unsigned>(N)));
}

long double exact_logprob(ProbabilityModel model, long long N, long long target, int n) {
  const Rational p = exact_probability(model, N, target, n);
  if (p == 0) return -std::numeric_limits<long double>::infinity();
  return log_of(p);
}

std::vector<RateRow> rate_convergence_report(int n, const Rational& x, std::span<const long long> Ns, unsigned threads) {
  const long long M = max_half_length(n);
  const long double rate = rate_function(x, n);
  for (long long N : Ns) {
    if (N < 1) throw InvalidSpec("N must be positive");
    if (boost::multiprecision::denominator(Rational(x * N)) != 1)
      throw InvalidSpec("N·x must be an integer (N = " + std::to_string(N) + ")");
  }

  const ProbabilityModel models[] = {ProbabilityModel::Composition, ProbabilityModel::TrueLength};
  std::vector<RateRow> rows(2 * Ns.size());
  parallel_chunks(rows.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RateRow& row = rows[i];
      row.n = n;
      row.N = Ns[i % Ns.size()];
      row.x = x;
      row.model = models[i / Ns.size()];
      row.rate = rate;
      const Rational scaled = 2 * x * row.N;
      if (x < 0 || x > M) {
        row.log_prob = -std::numeric_limits<long double>::infinity();
      } else {
        const auto target = static_cast<long long>(boost::multiprecision::numerator(scaled));
        row.log_prob = exact_logprob(row.model, row.N, target, n);
      }
      row.neg_log_prob_over_N = -row.log_prob / static_cast<long double>(row.N);
      if (x > 0 && x < M) row.kappa_asymptotic_log = kappa_asymptotic_log(to_long_double(x), M, row.N);
    }
  });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (i % Ns.size() != 0) rows[i].delta_previous = rows[i].neg_log_prob_over_N - rows[i - 1].neg_log_prob_over_N;
  }
  return rows;
}

}  // namespace braidwalk
