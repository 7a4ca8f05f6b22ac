#include "braidwalk/rational.hpp"

#include "braidwalk/error.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace braidwalk {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidSpec("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw InvalidSpec("zero denominator in '" + text + "'");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  long long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) --scale;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw InvalidSpec("malformed number '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw InvalidSpec("malformed number '" + text + "'");
    const std::string exponent = text.substr(pos + 1);
    if (exponent.empty()) throw InvalidSpec("malformed exponent in '" + text + "'");
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(exponent, &used);
    } catch (const std::exception&) {
      throw InvalidSpec("malformed exponent in '" + text + "'");
    }
    if (used != exponent.size()) throw InvalidSpec("malformed exponent in '" + text + "'");
    scale += e;
  }
  Rational value(digits);
  const BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(scale)));
  if (scale >= 0) {
    value *= ten_power;
  } else {
    value /= ten_power;
  }
  return negative ? Rational(-value) : value;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Rational harmonic_number(unsigned n) {
  Rational out = 0;
  for (unsigned i = 1; i <= n; ++i) out += Rational(1, i);
  return out;
}

long double log_of(const BigInt& value) {
  if (value <= 0) throw DomainError("log of non-positive integer");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 62) return std::log(static_cast<long double>(static_cast<unsigned long long>(value)));
  const auto shift = bits - 62;
  const auto mantissa = static_cast<unsigned long long>(value >> shift);
  return std::log(static_cast<long double>(mantissa)) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

long double log_of(const Rational& value) {
  if (value <= 0) throw DomainError("log of non-positive rational");
  return log_of(boost::multiprecision::numerator(value)) - log_of(boost::multiprecision::denominator(value));
}

long double to_long_double(const Rational& value) { return value.convert_to<long double>(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace braidwalk
