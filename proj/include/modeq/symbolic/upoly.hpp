#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modeq/numerics.hpp"

namespace modeq::symbolic {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Never stores trailing zeros, so the zero polynomial is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coeffs);
  UPoly(std::initializer_list<mpq_class> coeffs) : UPoly(std::vector<mpq_class>(coeffs)) {}

  static UPoly constant(const mpq_class& c);
  static UPoly monomial(const mpq_class& c, int degree);
  /// The indeterminate itself.
  static UPoly t() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const mpq_class& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  UPoly monic() const;
  UPoly derivative() const;
  UPoly pow(unsigned n) const;

  mpq_class eval(const mpq_class& at) const;
  ArbReal eval(const ArbReal& at) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Element of Q(t) kept in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(UPoly::constant(1)) {}
  RatFunc(const mpq_class& c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {}  // NOLINT
  RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::constant(1)) {}  // NOLINT
  /// Throws DivisionByZero when den = 0.
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const;
  mpq_class eval(const mpq_class& at) const;
  ArbReal eval(const ArbReal& at) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

}  // namespace modeq::symbolic
