#pragma once

#include "braidwalk/polynomial.hpp"
#include "braidwalk/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace braidwalk {

/// Number of ordered k-tuples of integers in [0, j) summing to n, by k-fold
/// convolution of the indicator of {0..j-1} (prefix-sum DP).
BigInt kappa_exact(long long n, long long j, long long k);

/// floor(n(n-1)/4): half the largest even length in S_n.
long long max_half_length(int n);

/// Natural log of the restricted-composition asymptotic
///   κ(Nx, M+1, N) ~ (2πN)^{-1/2} (M+1-x)^{N(M+1-x)+1/2} / (M-x)^{N(M-x)+3/2}
///                   · exp(-N ((M-x)/(M+1-x))^{M+1}).
/// Throws DomainError unless 0 < x < M.
long double kappa_asymptotic_log(long double x, long long M, long long N);

/// Rate function
///   (1 - 1/(M+1-x))^{M+1} + (M-x)log(M-x) - (M+1-x)log(M+1-x) + log(n!/2)
/// on [0, M] with 0·log 0 = 0, and +∞ elsewhere. Throws InvalidSpec for n < 3.
long double rate_function(const Rational& x, int n);

/// counts[ℓ] = #{σ ∈ S_n : ℓ(σ) = ℓ even}. Computed by enumerating the
/// Cayley graph of S_n and from the even coefficients of the Poincaré
/// polynomial of A_{n-1}; a mismatch is a logic error.
struct LengthHistogram {
  int n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
};

/// Throws InvalidSpec for n < 2 and CapExceeded for n > max_n.
LengthHistogram even_length_histogram(int n, int max_n = 9);

enum class ProbabilityModel {
  /// Pr(L_N = 2s) = κ(s, M+1, N)·(2/n!)^N: counts half-length tuples, each
  /// weighted like a single group element.
  Composition,
  /// Exact law of a sum of N lengths of uniform even permutations.
  TrueLength,
};

std::string to_string(ProbabilityModel model);

/// Pr(L_N = target) under `model`, exactly. target must be even
/// (InvalidSpec otherwise); unreachable targets give 0.
Rational exact_probability(ProbabilityModel model, long long N, long long target, int n);

/// log of exact_probability; -∞ when the probability is 0.
long double exact_logprob(ProbabilityModel model, long long N, long long target, int n);

struct RateRow {
  int n = 0;
  long long N = 0;
  Rational x;
  ProbabilityModel model = ProbabilityModel::Composition;
  long double log_prob = 0;
  long double neg_log_prob_over_N = 0;
  long double rate = 0;                             // rate_function(x, n); +∞ outside [0, M]
  std::optional<long double> kappa_asymptotic_log;  // interior x only
  std::optional<long double> delta_previous;        // change of neg_log_prob_over_N since the previous N
};

/// Rows for every N in `Ns` (each N·x must be an integer, InvalidSpec
/// otherwise) under both models, Composition first. Cells are computed in
/// parallel; row order is deterministic.
std::vector<RateRow> rate_convergence_report(int n, const Rational& x, std::span<const long long> Ns,
                                             unsigned threads = 0);

}  // namespace braidwalk
