#pragma once

#include "braidwalk/degree_table.hpp"
#include "braidwalk/limit_value.hpp"
#include "braidwalk/polynomial.hpp"

#include <span>
#include <vector>

namespace braidwalk {

/// Limiting E[ℓ(X_n)] on Z_m with generator {a}:
///   m odd          -> m/4 - 1/(4m)
///   m = 2 (mod 4)  -> (m/4 - 1/m, m/4 + 1/m) along even/odd n
///   m = 0 (mod 4)  -> m/4 along both parities
/// Throws InvalidSpec for m < 2.
LimitValue cyclic_limit(int m);

/// Sum of per-factor average lengths Σℓ/|G_i| of a direct product.
Rational product_limit(std::span<const Rational> average_lengths);

/// Σ n_i/4 - Σ_{n_i odd} 1/(4 n_i). Needs at least two moduli, each > 1.
Rational cyclic_product_limit(std::span<const int> moduli);

/// Π (t^{d_i} - 1)/(t - 1), expanded. Degree-1 entries contribute 1.
IntPolynomial poincare_polynomial(std::span<const int> degrees);

/// Ref W = Σ (d_i - 1).
long long reflection_count(std::span<const int> degrees);

struct LengthSums {
  BigInt total;       // Σ ℓ(w) = P'(1)
  BigInt signed_sum;  // Σ (-1)^ℓ(w) ℓ(w) = -P'(-1)
};

/// Both sums read off the derivative of the expanded Poincaré polynomial.
LengthSums length_sums(std::span<const int> degrees);

/// Parity-class limits 2·Σ_{ℓ even} ℓ/|W| and 2·Σ_{ℓ odd} ℓ/|W| computed
/// from the Poincaré polynomial alone. Valid for any finite Coxeter group.
LimitValue coxeter_limit_from_degrees(std::span<const int> degrees);

/// Closed form for an irreducible type: A1 -> (0, 1); I2(m), m odd
/// (A2 = I2(3) included) -> (m/2 - 1/(2m), m/2 + 1/(2m)); otherwise
/// Ref W/2 along both parities.
LimitValue coxeter_limit(const CoxeterType& type);

/// Products: a single factor uses the closed form. Two or more factors add
/// their average lengths P_i'(1)/P_i(1); the even and odd limits coincide
/// because the degree multiset then holds at least two even degrees.
LimitValue coxeter_limit(std::span<const CoxeterType> product);

}  // namespace braidwalk
