#pragma once

#include "braidwalk/rational.hpp"

#include <string>

namespace braidwalk {

/// Locale-independent shortest form with `digits` significant digits
/// (round-half-even on the exact binary value). Infinities print as `inf`
/// and `-inf`, NaN as `nan`.
std::string format_real(long double value, int digits = 12);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& text);

}  // namespace braidwalk
