#pragma once

#include <string>

#include "modeq/numerics.hpp"

namespace modeq::test {

inline Precision p100() { return Precision::from_digits(100); }

inline ArbReal tol100() { return default_tolerance(p100()); }

inline ArbReal rat(long num, long den, Precision prec = p100()) { return ArbReal::from_ratio(num, den, prec); }

inline ArbReal dec(const std::string& text, Precision prec = p100()) { return ArbReal::from_string(text, prec); }

/// |a - b| < tol
inline bool near(const ArbReal& a, const ArbReal& b, const ArbReal& tol) { return abs(a - b) < tol; }

/// |a - b| < 10^-digits
inline bool near_digits(const ArbReal& a, const ArbReal& b, long digits) {
  return abs(a - b) < ArbReal::pow10(-digits, wider(a.precision(), b.precision()));
}

}  // namespace modeq::test
