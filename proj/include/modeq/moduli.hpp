#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "modeq/numerics.hpp"
#include "modeq/qseries.hpp"

namespace modeq {

/// Degrees (n1, n2) of alpha and beta over a common base nome: alpha is
/// evaluated at q^n1 and beta at q^n2, so beta has degree n2/n1 over alpha.
struct DegreePair {
  int n1 = 1;
  int n2 = 1;

  /// Throws DomainError unless 0 < n1 < n2 and gcd(n1, n2) = 1.
  DegreePair(int n1, int n2);

  /// n2 / n1 as an exact rational.
  mpq_class degree() const { return mpq_class(n2, n1); }
  std::string to_string() const;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct ModuliPair {
  ArbReal q;
  DegreePair degrees;
  ArbReal alpha;
  ArbReal beta;
  /// (alpha beta)^(1/8)
  ArbReal x;
  /// ((1 - alpha)(1 - beta))^(1/8)
  ArbReal y;
};

struct MultiplierSample {
  mpq_class degree;
  /// phi^2(q^n1)
  ArbReal z1;
  /// phi^2(q^n2)
  ArbReal zn;
  ArbReal m;
  /// z1 / zn from 2F1(alpha) / 2F1(beta); filled for n1 = 1 and q <= 1/10.
  std::optional<ArbReal> m_hypergeom;
};

struct RussellTriple {
  ArbReal P;
  ArbReal Q;
  ArbReal R;
  int sign = 1;
};

namespace moduli {

/// alpha = 16 q psi^4(q^2) / phi^4(q). Throws DomainError unless 0 < q < 1.
ArbReal alpha_from_q(const ArbReal& q);
/// 1 - alpha = (phi(-q) / phi(q))^4.
ArbReal alpha_complement_from_q(const ArbReal& q);

/// alpha = alpha_from_q(q^n1), beta = alpha_from_q(q^n2); x, y by eighth roots.
ModuliPair moduli_pair(const ArbReal& q, DegreePair degrees);

/// m = phi^2(q^n1) / phi^2(q^n2).
MultiplierSample multiplier(const ArbReal& q, DegreePair degrees);

/// (-1)^((n1+n2)/8). Throws SignUndefined when 8 does not divide n1 + n2.
int russell_sign(DegreePair degrees);

/// P = 1 + s(x+y), Q = 4(x + y + s xy), R = 4xy with s the Russell sign.
RussellTriple russell_triple(const ModuliPair& mp);

}  // namespace moduli
}  // namespace modeq
