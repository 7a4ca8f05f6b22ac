#pragma once

#include "braidwalk/cayley.hpp"
#include "braidwalk/limit_value.hpp"
#include "braidwalk/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace braidwalk {

/// Largest group for which exact finite-N laws are computed.
inline constexpr std::size_t kExactLawCap = 5000;

/// Step law of the walk: one probability per letter of the group alphabet
/// (same order as ConcreteGroup::alphabet()) plus a holding probability.
///
/// Only symmetric kernels are admitted: weight(σ) = weight(σ⁻¹). On a Cayley
/// graph this makes the transition matrix doubly stochastic.
struct StepDistribution {
  std::vector<Rational> weights;
  Rational hold = 0;

  const Rational& weight(std::size_t letter) const { return weights[letter]; }
};

/// Equal mass (1 - hold)/|S ∪ S⁻¹| on each distinct letter. Requires
/// 0 <= hold < 1 (InvalidSpec otherwise).
StepDistribution uniform_step_distribution(const ConcreteGroup& group, const Rational& hold = 0);

/// Per-generator weights, shared between σ and σ⁻¹ and normalised to
/// total mass 1 - hold. A zero weight disables the generator in both
/// directions; at least one generator must keep positive weight.
StepDistribution weighted_step_distribution(const ConcreteGroup& group, const std::vector<Rational>& generator_weights,
                                            const Rational& hold = 0);

/// Throws InvalidSpec unless the distribution matches the group's alphabet,
/// is non-negative, sums to 1, has hold < 1, and is symmetric.
void validate(const StepDistribution& dist, const ConcreteGroup& group);

/// Row and column sums of the induced |G| x |G| transition matrix, checked
/// in exact arithmetic. Throws CapExceeded above kExactLawCap vertices.
bool is_doubly_stochastic(const CayleyGraph& graph, const StepDistribution& dist);

struct WalkResult {
  std::int64_t steps = 0;
  std::vector<std::uint32_t> visited;  // X_0..X_N as vertex indices; empty unless recorded
  std::vector<double> samples;         // f(X_0)..f(X_N)
  std::uint64_t seed = 0;
};

/// One trajectory from X_0 = identity. Each step draws u = rng.uniform()
/// and takes the first letter whose cumulative weight exceeds u (hold last).
/// When hold = 0 on a bipartite graph, every step is checked to flip the
/// length parity.
WalkResult simulate(const CayleyGraph& graph, const StepDistribution& dist, std::int64_t steps, std::uint64_t seed,
                    const Functional& f, bool record_visits = true);

/// Whether the even/odd subsequences have distinct limit laws: no odd
/// relator and no holding mass.
bool parity_split_applies(const Presentation& presentation, const StepDistribution& dist);

/// Limit of E[f(X_n)] for a walk with no holding mass: the uniform average
/// when some relator has odd length, otherwise twice the parity-class sums
/// over |G|.
LimitValue limiting_expectation(const CayleyGraph& graph, const Presentation& presentation, const Functional& f);
/// Same, but a positive holding mass makes the chain aperiodic.
LimitValue limiting_expectation(const CayleyGraph& graph, const Presentation& presentation,
                                const StepDistribution& dist, const Functional& f);

/// Predicted law of X_n for large n with the parity of `step`.
std::vector<double> limit_law(const CayleyGraph& graph, bool parity_split, std::int64_t step);

/// Exact law of X_steps by repeated application of the transition operator.
/// Throws CapExceeded above kExactLawCap vertices.
std::vector<double> exact_law(const CayleyGraph& graph, const StepDistribution& dist, std::int64_t steps);

double total_variation(std::span<const double> p, std::span<const double> q);

struct EmpiricalRow {
  std::int64_t step = 0;
  std::string parity;  // "even", "odd", or "all" when there is a single limit
  double empirical_mean = 0;
  double standard_error = 0;
  Rational exact_limit;
  double tv_distance = 0;  // empirical law of X_step vs the predicted limit law
  double exact_tv = -1;    // exact law of X_step vs the limit law; -1 when |G| > kExactLawCap
};

struct EmpiricalReport {
  std::vector<EmpiricalRow> rows;  // steps - 1, steps, steps + 1 (negative steps omitted)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of E[f(X_N)] for N = steps - 1, steps, steps + 1
/// over independent trajectories. Trial i uses trial_seed(seed, i), so the
/// report does not depend on `threads`.
EmpiricalReport empirical_vs_limit(const CayleyGraph& graph, const Presentation& presentation,
                                   const StepDistribution& dist, const Functional& f, std::int64_t steps,
                                   std::uint64_t trials, std::uint64_t seed = kDefaultSeed, unsigned threads = 0);

}  // namespace braidwalk
