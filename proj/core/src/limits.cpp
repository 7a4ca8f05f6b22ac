#include "braidwalk/limits.hpp"

namespace braidwalk {

LimitValue cyclic_limit(int m) {
  if (m < 2) throw InvalidSpec("cyclic_limit needs m >= 2");
  const Rational quarter(m, 4);
  if (m % 2 == 1) return LimitValue::single(quarter - Rational(1, 4LL * m));
  if (m % 4 == 2) return LimitValue::parity_split(quarter - Rational(1, m), quarter + Rational(1, m));
  return LimitValue::parity_split(quarter, quarter);
}

Rational product_limit(std::span<const Rational> average_lengths) {
  Rational sum = 0;
  for (const auto& a : average_lengths) sum += a;
  return sum;
}

Rational cyclic_product_limit(std::span<const int> moduli) {
  if (moduli.size() < 2) throw InvalidSpec("cyclic_product_limit needs at least two moduli");
  Rational sum = 0;
  for (int n : moduli) {
    if (n <= 1) throw InvalidSpec("cyclic_product_limit needs every modulus > 1");
    sum += Rational(n, 4);
    if (n % 2 == 1) sum -= Rational(1, 4LL * n);
  }
  return sum;
}

IntPolynomial poincare_polynomial(std::span<const int> degrees) {
  IntPolynomial p({1});
  for (int d : degrees) {
    if (d < 1) throw InvalidSpec("degrees must be positive");
    // (t^d - 1)/(t - 1) = 1 + t + ... + t^{d-1}
    p = p * IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(d), 1));
  }
  return p;
}

long long reflection_count(std::span<const int> degrees) {
  long long sum = 0;
  for (int d : degrees) sum += d - 1;
  return sum;
}

LengthSums length_sums(std::span<const int> degrees) {
  const IntPolynomial derivative = poincare_polynomial(degrees).derivative();
  return {derivative.evaluate(1), -derivative.evaluate(-1)};
}

LimitValue coxeter_limit_from_degrees(std::span<const int> degrees) {
  const IntPolynomial p = poincare_polynomial(degrees);
  const BigInt order = p.evaluate(1);
  const LengthSums sums = length_sums(degrees);
  const BigInt even = (sums.total + sums.signed_sum) / 2;
  const BigInt odd = (sums.total - sums.signed_sum) / 2;
  return LimitValue::parity_split(Rational(2 * even, order), Rational(2 * odd, order));
}

LimitValue coxeter_limit(const CoxeterType& type) {
  const auto degrees = degrees_of(type);
  if (type.family == 'A' && type.rank == 1) return LimitValue::parity_split(0, 1);
  const bool odd_dihedral = (type.family == 'I' && type.rank % 2 == 1) || (type.family == 'A' && type.rank == 2);
  if (odd_dihedral) {
    const int m = type.family == 'I' ? type.rank : 3;
    return LimitValue::parity_split(Rational(m, 2) - Rational(1, 2 * m), Rational(m, 2) + Rational(1, 2 * m));
  }
  const Rational half_ref(reflection_count(degrees), 2);
  return LimitValue::parity_split(half_ref, half_ref);
}

LimitValue coxeter_limit(std::span<const CoxeterType> product) {
  if (product.empty()) throw InvalidSpec("empty Coxeter product");
  if (product.size() == 1) return coxeter_limit(product.front());
  std::vector<Rational> averages;
  for (const auto& factor : product) {
    const auto degrees = degrees_of(factor);
    averages.emplace_back(length_sums(degrees).total, poincare_polynomial(degrees).evaluate(1));
  }
  const Rational sum = product_limit(averages);
  return LimitValue::parity_split(sum, sum);
}

}  // namespace braidwalk
