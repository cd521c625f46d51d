#pragma once

#include "modeq/numerics.hpp"

namespace modeq {

/// Elliptic modulus alpha, strictly inside (0, 1).
struct Modulus {
  ArbReal alpha;

  /// Throws DomainError unless 0 < alpha < 1.
  explicit Modulus(ArbReal alpha);
};

namespace hypergeom {

/// 2F1(1/2, 1/2; 1; x) by its power series, term_{k+1} = term_k x ((2k+1)/(2k+2))^2,
/// stopped once term * x / (1 - x) drops below the working precision.
/// Throws DomainError unless 0 <= x < 1.
ArbReal hyp2f1_half(const ArbReal& x);

/// Same function through 1 / AGM(1, sqrt(1 - x)).
ArbReal hyp2f1_half_agm(const ArbReal& x);

/// Arguments above this use the AGM route inside period_ratio; the series
/// needs roughly bits / -log2(x) terms and becomes impractical near 1.
inline constexpr double kSeriesCutoff = 0.9;

/// 2F1(1 - alpha) / 2F1(alpha).
ArbReal period_ratio(const Modulus& m);

/// exp(-pi * period_ratio(alpha)), in (0, 1) and increasing in alpha.
ArbReal nome(const Modulus& m);

}  // namespace hypergeom
}  // namespace modeq
