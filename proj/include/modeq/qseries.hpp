#pragma once

#include <string>

#include <gmpxx.h>

#include "modeq/numerics.hpp"

namespace modeq {

/// Parses "1/10", "-3/20", "0" or an exact decimal such as "0.05" or "1e-6".
/// Throws DomainError on anything else.
mpq_class parse_rational(const std::string& text);

/// A nome value kept as an exact rational so residuals are reproducible;
/// rounded to a working precision only when evaluated.
struct QPoint {
  mpq_class value;

  QPoint() = default;
  /// Throws DomainError unless |q| < 1.
  explicit QPoint(mpq_class q);
  /// parse_rational, then the |q| < 1 check.
  static QPoint parse(const std::string& text);

  ArbReal at(Precision prec) const { return ArbReal::from_rational(value, prec); }
  std::string to_string() const { return value.get_str(); }

  friend bool operator==(const QPoint& a, const QPoint& b) { return a.value == b.value; }
  friend bool operator<(const QPoint& a, const QPoint& b) { return a.value < b.value; }
};

/// Where a series or product is cut off: terms with index >= n_max are
/// dropped and their total contribution is at most tail_bound.
struct TruncationPlan {
  long n_max = 0;
  ArbReal tail_bound;
};

namespace qseries {

/// log2|x| without leaving MPFR's exponent range; -inf for zero.
double log2_abs(const ArbReal& x);

/// Cut-off for (x; q)_inf so that |x| |q|^K / (1 - |q|) < 2^-target_bits.
TruncationPlan pochhammer_plan(const ArbReal& x, const ArbReal& q, long target_bits);
/// (x; q)_inf = prod_{k>=0} (1 - x q^k). Throws DomainError if |q| >= 1.
ArbReal pochhammer_inf(const ArbReal& x, const ArbReal& q);
ArbReal pochhammer_inf(const ArbReal& x, const ArbReal& q, long n_max);

/// Ramanujan's f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}, summed
/// outward from n = 0. Throws DomainError if |ab| >= 1.
ArbReal theta_f(const ArbReal& a, const ArbReal& b);
/// f(a, b) through the Jacobi triple product (-a; ab)(-b; ab)(ab; ab).
ArbReal theta_f_product(const ArbReal& a, const ArbReal& b);

/// Smallest N with |q|^{N^2} < 2^-(effective bits); tail 2|q|^{N^2}/(1-|q|).
TruncationPlan phi_plan(const ArbReal& q);
/// Smallest N with |q|^{N(N+1)/2} < 2^-(effective bits).
TruncationPlan psi_plan(const ArbReal& q);

/// phi(q) = 1 + 2 sum_{n>=1} q^{n^2}; negative q is summed directly.
ArbReal phi(const ArbReal& q);
ArbReal phi_series(const ArbReal& q, long n_max);
/// phi(q) = (-q; q^2)^2 (q^2; q^2).
ArbReal phi_product(const ArbReal& q);

/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
ArbReal psi(const ArbReal& q);
ArbReal psi_series(const ArbReal& q, long n_max);
/// psi(q) = f(q, q^3) = (-q; q^4)(-q^3; q^4)(q^4; q^4).
ArbReal psi_product(const ArbReal& q);

}  // namespace qseries
}  // namespace modeq
