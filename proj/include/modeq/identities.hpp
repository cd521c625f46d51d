#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "modeq/moduli.hpp"
#include "modeq/numerics.hpp"
#include "modeq/qseries.hpp"

namespace modeq {

/// One tag per numbered modular equation in the catalog.
enum class IdentityId {
  EQ10,
  EQ11,
  EQ12,
  EQ13,
  EQ14,
  EQ15_15,
  EQ15_35,
  EQ17,
  EQ18,
  EQ19,
  EQ20,
  EQ21,
  EQ22_FD,
  EQ28,
  EQ33_T,
  EQ36,
  EQ37,
  EQ38,
  EQ39A,
  EQ39B,
  EQ40,
  EQ41,
  EQ42,
};

inline constexpr std::size_t kIdentityCount = 23;

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  DegreePair degrees;
  /// Built from theta quotients alone, with no alpha/beta on either side.
  bool theta_form;
  /// Largest q the identity is validated on; the lower end is always q > 0.
  mpq_class max_q;
  std::string_view statement;
};

/// Catalog in tag order.
const std::vector<IdentityInfo>& catalog();
const IdentityInfo& info(IdentityId id);
std::string_view tag(IdentityId id);
std::optional<IdentityId> parse_tag(std::string_view text);
std::vector<IdentityId> all_identities();

/// Both sides of an identity at one q. For EQ22_FD the sides are
/// n (d alpha / d beta) beta(1-beta) / (alpha(1-alpha)) and m^2, so the
/// residual is relative to the multiplier scale.
struct Sides {
  ArbReal lhs;
  ArbReal rhs;

  ArbReal residual() const { return lhs - rhs; }
};

/// Throws GridRangeError when q is outside (0, max_q] for the identity.
Sides sides(IdentityId id, const QPoint& q, Precision prec);
ArbReal residual(IdentityId id, const QPoint& q, Precision prec);

/// Which derivative the multiplier law is tested with.
enum class DerivativeOrientation {
  /// n d(alpha)/d(beta) = alpha(1-alpha) m^2 / (beta(1-beta)), as printed.
  AlphaByBeta,
  /// n d(beta)/d(alpha) with the same right-hand side.
  BetaByAlpha,
};

/// |n (delta alpha / delta beta) - alpha(1-alpha) m^2 / (beta(1-beta))| with
/// central differences of step h around q, alpha = alpha(q), beta = alpha(q^n).
/// Throws StepTooSmall when delta beta sinks into rounding noise.
ArbReal verify_eq22_fd(const ArbReal& q, int n, const ArbReal& h,
                       DerivativeOrientation orientation = DerivativeOrientation::AlphaByBeta);

struct IdentityReport {
  IdentityId id;
  QPoint q;
  /// Empty when evaluation threw; `error` then carries the message.
  std::optional<ArbReal> residual;
  ArbReal tolerance;
  bool passed = false;
  long precision_bits = 0;
  double elapsed_ms = 0.0;
  std::string error;
};

/// Evaluates one identity at one point; errors become failed reports.
IdentityReport evaluate(IdentityId id, const QPoint& q, Precision prec, const ArbReal& tolerance);

/// q = 10^-6 sanity anchors: both sides of the listed equations approach
/// a known rational as q -> 0.
struct LimitAnchor {
  IdentityId id;
  mpq_class expected;
};

struct LimitCheck {
  LimitAnchor anchor;
  ArbReal lhs;
  ArbReal rhs;
  bool passed = false;
};

const std::vector<LimitAnchor>& limit_anchors();
/// Evaluates every anchor at q = 10^-6 with tolerance 10^-4 on both sides.
std::vector<LimitCheck> check_limit_anchors(Precision prec);

}  // namespace modeq
