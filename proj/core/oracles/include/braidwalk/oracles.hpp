#pragma once

// Slow, independent reference computations. Nothing here reuses the
// library's group encodings, BFS, DP or closed forms; the library links
// against none of it.

#include "braidwalk/cayley.hpp"
#include "braidwalk/rational.hpp"
#include "braidwalk/walk.hpp"

#include <map>
#include <vector>

namespace braidwalk::oracle {

using Perm = std::vector<int>;  // images of 0..d-1

/// All permutations of 0..n-1 in lexicographic order.
std::vector<Perm> permutations(int n);
int inversions(const Perm& p);
int cycles(const Perm& p);

/// Faithful action of the spec's generators on a finite point set, built
/// from the geometric definition of each family (polygon flags for the
/// dihedral families, ±1..±n for B and D, disjoint unions for products).
std::vector<Perm> point_generators(const GroupSpec& spec);

/// Word length of every element of the group generated by `generators`,
/// keyed by the element as a permutation, by breadth-first search over a
/// std::map with inverses included.
std::map<Perm, int> word_lengths(const std::vector<Perm>& generators);

/// counts[ℓ] = number of elements of length ℓ.
std::vector<BigInt> length_histogram(const GroupSpec& spec);

/// Average of f(ℓ) over a parity class (0 even, 1 odd) of the histogram.
Rational parity_class_average_length(const std::vector<BigInt>& histogram, int parity);

/// Σ_{r ∈ Z_m} min(r, m - r) / m.
Rational cyclic_average_length(int m);

/// Number of k-tuples in [0, j) summing to n, by listing every tuple.
BigInt kappa_by_tuples(int n, int j, int k);
/// Σ_m (-1)^m C(k, m) C(n - m j + k - 1, k - 1).
BigInt kappa_inclusion_exclusion(long long n, long long j, long long k);

/// Pr(ℓ(σ_1) + ... + ℓ(σ_N) = target) for independent uniform even
/// permutations of S_n, by listing all N-tuples.
Rational true_length_probability_by_tuples(int n, int N, int target);

/// Law of X_steps from the dense |G| x |G| transition matrix built from
/// the graph's arcs, by repeated vector-matrix products.
std::vector<double> dense_chain_law(const CayleyGraph& graph, const StepDistribution& dist, long long steps);

}  // namespace braidwalk::oracle
