#pragma once

#include "braidwalk/rational.hpp"

#include <string>
#include <vector>

namespace braidwalk {

/// Polynomial with arbitrary-precision integer coefficients; coefficient i
/// multiplies t^i. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : BigInt(0); }
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coefficients_.size()) - 1; }

  BigInt evaluate(const BigInt& t) const;
  IntPolynomial derivative() const;
  bool is_palindromic() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "x^3 + 3x^2 + 2x" with variable x, highest degree first.
  std::string to_string(char variable = 't') const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

}  // namespace braidwalk
