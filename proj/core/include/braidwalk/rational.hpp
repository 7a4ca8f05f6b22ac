#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braidwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses `p`, `p/q`, or a finite decimal such as `0.25` or `-1.5e-2` exactly.
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
BigInt binomial(long long n, long long k);
Rational harmonic_number(unsigned n);

/// Natural logarithm of a positive integer of any size, in extended precision.
long double log_of(const BigInt& value);

/// Natural logarithm of a positive rational; numerator and denominator are
/// logged separately so huge values never overflow.
long double log_of(const Rational& value);

long double to_long_double(const Rational& value);
double to_double(const Rational& value);

}  // namespace braidwalk
