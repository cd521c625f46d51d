#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "modeq/errors.hpp"

namespace modeq {

/// Binary working precision. Arithmetic runs at bits + guard_bits;
/// printed values are rounded back to bits.
struct Precision {
  static constexpr long kMinBits = 64;
  static constexpr long kDefaultGuardBits = 64;

  long bits = 333;
  long guard_bits = kDefaultGuardBits;

  Precision() = default;
  explicit Precision(long bits, long guard_bits = kDefaultGuardBits);

  /// Smallest precision whose decimal_digits() is at least `digits`.
  static Precision from_digits(int digits, long guard_bits = kDefaultGuardBits);

  long effective() const { return bits + guard_bits; }

  /// D = floor(bits * log10(2)).
  int decimal_digits() const;

  friend bool operator==(const Precision&, const Precision&) = default;
};

/// The precision with the larger effective bit count.
inline Precision wider(const Precision& a, const Precision& b) {
  return a.effective() >= b.effective() ? a : b;
}

/// Arbitrary-precision real. Owns an mpfr_t allocated at the effective
/// precision of its Precision; every operation rounds to nearest.
///
/// Binary operations between values of different precision run at the
/// larger effective precision.
class ArbReal {
 public:
  explicit ArbReal(Precision prec = Precision{});
  ArbReal(long value, Precision prec);
  ArbReal(const ArbReal& other);
  ArbReal(ArbReal&& other) noexcept;
  ArbReal& operator=(const ArbReal& other);
  ArbReal& operator=(ArbReal&& other) noexcept;
  ~ArbReal();

  static ArbReal from_rational(const mpq_class& value, Precision prec);
  static ArbReal from_ratio(long num, long den, Precision prec);
  /// Decimal literal such as "0.0432139" or "-1.5e-7".
  static ArbReal from_string(std::string_view text, Precision prec);
  /// 10^exponent.
  static ArbReal pow10(long exponent, Precision prec);
  static ArbReal pi(Precision prec);

  const Precision& precision() const { return prec_; }
  /// Same value re-rounded to another precision.
  ArbReal with_precision(Precision prec) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// |*this| < tolerance.
  bool is_zero_within(const ArbReal& tolerance) const;

  /// One unit in the last place at the effective precision.
  ArbReal ulp() const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; LONG_MIN for zero.
  long exponent2() const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// `digits` significant digits (capped at decimal_digits()). Exact
  /// integers print without a fraction.
  std::string to_string(int digits) const;
  /// Scientific notation with `digits` significant digits, e.g. "1.23457e-95".
  std::string to_scientific(int digits) const;

  ArbReal operator-() const;
  ArbReal abs() const;

  ArbReal& operator+=(const ArbReal& rhs);
  ArbReal& operator-=(const ArbReal& rhs);
  ArbReal& operator*=(const ArbReal& rhs);
  ArbReal& operator/=(const ArbReal& rhs);
  ArbReal& operator*=(long rhs);
  ArbReal& operator/=(long rhs);

  friend ArbReal operator+(ArbReal lhs, const ArbReal& rhs) { return lhs += rhs; }
  friend ArbReal operator-(ArbReal lhs, const ArbReal& rhs) { return lhs -= rhs; }
  friend ArbReal operator*(ArbReal lhs, const ArbReal& rhs) { return lhs *= rhs; }
  friend ArbReal operator/(ArbReal lhs, const ArbReal& rhs) { return lhs /= rhs; }
  friend ArbReal operator*(ArbReal lhs, long rhs) { return lhs *= rhs; }
  friend ArbReal operator*(long lhs, ArbReal rhs) { return rhs *= lhs; }
  friend ArbReal operator/(ArbReal lhs, long rhs) { return lhs /= rhs; }
  friend ArbReal operator+(ArbReal lhs, long rhs);
  friend ArbReal operator+(long lhs, const ArbReal& rhs);
  friend ArbReal operator-(ArbReal lhs, long rhs);
  friend ArbReal operator-(long lhs, const ArbReal& rhs);
  friend ArbReal operator/(long lhs, const ArbReal& rhs);

  friend bool operator==(const ArbReal& a, const ArbReal& b);
  friend std::partial_ordering operator<=>(const ArbReal& a, const ArbReal& b);
  friend bool operator==(const ArbReal& a, long b);
  friend std::partial_ordering operator<=>(const ArbReal& a, long b);

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw_mut() { return value_; }

 private:
  Precision prec_;
  mpfr_t value_;
};

/// Throws DomainError on a < 0.
ArbReal sqrt(const ArbReal& a);
ArbReal exp(const ArbReal& a);
/// Throws DomainError on a <= 0.
ArbReal log(const ArbReal& a);
/// a^n for integer n; throws DivisionByZero for 0^(negative).
ArbReal pow(const ArbReal& a, long n);
/// Real branch of a^(p/r). For even r the radicand must be non-negative
/// (DomainError otherwise) and the non-negative root is returned.
ArbReal root_pow(const ArbReal& a, long p, unsigned long r);
ArbReal abs(const ArbReal& a);
ArbReal max(const ArbReal& a, const ArbReal& b);

/// Pass threshold 10^-(D-10) for a precision with D decimal digits.
ArbReal default_tolerance(Precision prec);

}  // namespace modeq
