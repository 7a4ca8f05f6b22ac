#include "braidwalk/polynomial.hpp"

#include <algorithm>

namespace braidwalk {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<BigInt> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) d[i - 1] = coefficients_[i] * i;
  return IntPolynomial(std::move(d));
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(), coefficients_.rbegin());
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const BigInt& c = coefficients_[k];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.str();
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace braidwalk
