#pragma once

#include "braidwalk/rational.hpp"

#include <string>

namespace braidwalk {

/// Limit of E[f(X_n)]: one value, or separate limits along even and odd n.
struct LimitValue {
  enum class Kind { Single, ParitySplit };

  Kind kind = Kind::Single;
  Rational even;  // the single value when kind == Single
  Rational odd;

  static LimitValue single(Rational value) { return {Kind::Single, value, value}; }
  static LimitValue parity_split(Rational even, Rational odd) { return {Kind::ParitySplit, std::move(even), std::move(odd)}; }

  /// Limit along steps of the given parity (0 even, 1 odd).
  const Rational& at_parity(long long step) const { return step % 2 == 0 ? even : odd; }
  /// Both subsequences share one limit.
  bool coincides() const { return even == odd; }

  /// `v` for Single and for a split whose branches coincide; `(e, o)` otherwise.
  std::string to_string() const {
    if (coincides()) return braidwalk::to_string(even);
    return "(" + braidwalk::to_string(even) + ", " + braidwalk::to_string(odd) + ")";
  }

  friend bool operator==(const LimitValue&, const LimitValue&) = default;
};

}  // namespace braidwalk
