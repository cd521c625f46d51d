#include "modeq/identities.hpp"

#include <algorithm>
#include <chrono>

namespace modeq {

namespace {

using qseries::phi;
using qseries::psi;

const DegreePair kDeg7{1, 7};
const DegreePair kDeg23{1, 23};
const DegreePair kDeg15{1, 15};
const DegreePair kDeg35{3, 5};

// m - n/m with n = n2/n1.
ArbReal multiplier_side(const ArbReal& m, DegreePair d) { return m - d.n2 / (d.n1 * m); }

// Quantities on the alpha/beta side of the catalog.
struct AlgebraicSide {
  ModuliPair mp;
  ArbReal m;
  ArbReal a4;   // (alpha beta)^(1/4)
  ArbReal b4;   // ((1-alpha)(1-beta))^(1/4)
  ArbReal prod; // alpha beta (1-alpha)(1-beta)
  ArbReal xy8;  // prod^(1/8)
  ArbReal s;    // sqrt((1 + sqrt(alpha beta) + sqrt((1-alpha)(1-beta))) / 2)
};

AlgebraicSide algebraic(const ArbReal& q, DegreePair d) {
  ModuliPair mp = moduli::moduli_pair(q, d);
  const ArbReal ab = mp.alpha * mp.beta;
  const ArbReal cc = (1 - mp.alpha) * (1 - mp.beta);
  ArbReal m = moduli::multiplier(q, d).m;
  ArbReal a4 = root_pow(ab, 1, 4);
  ArbReal b4 = root_pow(cc, 1, 4);
  ArbReal prod = ab * cc;
  ArbReal xy8 = root_pow(prod, 1, 8);
  ArbReal s = sqrt((1 + sqrt(ab) + sqrt(cc)) / 2);
  return {std::move(mp), std::move(m), std::move(a4), std::move(b4), std::move(prod), std::move(xy8), std::move(s)};
}

// Theta-quotient dictionary for a pair with 8 | n1 + n2.
struct ThetaSide {
  ArbReal x;    // 2 q^{(n1+n2)/8} psi(q^n1) psi(q^n2) / (phi(q^n1) phi(q^n2))
  ArbReal y;    // phi(-q^{2 n1}) phi(-q^{2 n2}) / (...)
  ArbReal x2;   // 4 q^{(n1+n2)/4} psi(q^{2 n1}) psi(q^{2 n2}) / (...)
  ArbReal y2;   // phi(-q^n1) phi(-q^n2) / (...)
  ArbReal s;    // phi(q^{2 n1}) phi(q^{2 n2}) / (...) + 4 q^{(n1+n2)/2} psi(q^{4 n1}) psi(q^{4 n2}) / (...)
  ArbReal lhs;  // phi^2(q^n1)/phi^2(q^n2) - (n2/n1) phi^2(q^n2)/phi^2(q^n1)
};

ThetaSide theta_side(const ArbReal& q, DegreePair d) {
  const long c = d.n1 + d.n2;
  auto at = [&](long k, int n) { return pow(q, k * n); };
  const ArbReal p1 = phi(at(1, d.n1));
  const ArbReal p2 = phi(at(1, d.n2));
  const ArbReal den = p1 * p2;
  ArbReal x = 2 * pow(q, c / 8) * psi(at(1, d.n1)) * psi(at(1, d.n2)) / den;
  ArbReal y = phi(-at(2, d.n1)) * phi(-at(2, d.n2)) / den;
  ArbReal x2 = 4 * pow(q, c / 4) * psi(at(2, d.n1)) * psi(at(2, d.n2)) / den;
  ArbReal y2 = phi(-at(1, d.n1)) * phi(-at(1, d.n2)) / den;
  ArbReal s = phi(at(2, d.n1)) * phi(at(2, d.n2)) / den +
              4 * pow(q, c / 2) * psi(at(4, d.n1)) * psi(at(4, d.n2)) / den;
  const ArbReal ratio = pow(p1 / p2, 2);
  ArbReal lhs = ratio - d.n2 / (d.n1 * ratio);
  return {std::move(x), std::move(y), std::move(x2), std::move(y2), std::move(s), std::move(lhs)};
}

// 8th-order central difference weights for offsets 1..4 (antisymmetric).
constexpr std::array<std::array<long, 2>, 4> kStencil8{{{4, 5}, {-1, 5}, {4, 105}, {-1, 280}}};

ArbReal stencil_derivative(const std::array<ArbReal, 8>& samples, const ArbReal& h) {
  // samples[2k] = f(q + (k+1)h), samples[2k+1] = f(q - (k+1)h)
  ArbReal acc(h.precision());
  for (std::size_t k = 0; k < kStencil8.size(); ++k) {
    acc += (samples[2 * k] - samples[2 * k + 1]) * kStencil8[k][0] / kStencil8[k][1];
  }
  return acc / h;
}

// Multiplier law with an 8th-order stencil at raised precision, scaled so
// both sides are O(m^2).
Sides multiplier_law_sides(const ArbReal& q_in, DegreePair d) {
  const Precision target = q_in.precision();
  const Precision work(target.bits + target.effective() / 8 + 32, target.guard_bits);
  const ArbReal q = q_in.with_precision(work);
  ArbReal h = q;
  mpfr_mul_2si(h.raw_mut(), h.raw(), -(work.effective() / 9), MPFR_RNDN);

  std::array<ArbReal, 8> a_samples;
  std::array<ArbReal, 8> b_samples;
  for (long k = 1; k <= 4; ++k) {
    for (int side = 0; side < 2; ++side) {
      const ArbReal qk = side == 0 ? q + k * h : q - k * h;
      const std::size_t idx = static_cast<std::size_t>(2 * (k - 1) + side);
      a_samples[idx] = moduli::alpha_from_q(pow(qk, d.n1));
      b_samples[idx] = moduli::alpha_from_q(pow(qk, d.n2));
    }
  }
  const ArbReal da = stencil_derivative(a_samples, h);
  const ArbReal db = stencil_derivative(b_samples, h);
  const ArbReal alpha = moduli::alpha_from_q(pow(q, d.n1));
  const ArbReal beta = moduli::alpha_from_q(pow(q, d.n2));
  const ArbReal m = moduli::multiplier(q, d).m;
  ArbReal lhs = d.n2 * da * beta * (1 - beta) / (d.n1 * db * alpha * (1 - alpha));
  return {lhs.with_precision(target), (m * m).with_precision(target)};
}

Sides evaluate_sides(IdentityId id, const ArbReal& q) {
  const Precision prec = q.precision();
  const ArbReal zero(prec);
  switch (id) {
    case IdentityId::EQ10: {
      const auto a = algebraic(q, kDeg7);
      return {a.mp.x + a.mp.y, ArbReal(1, prec)};
    }
    case IdentityId::EQ11: {
      const auto a = algebraic(q, kDeg7);
      return {multiplier_side(a.m, kDeg7), 2 * (a.mp.x - a.mp.y) * (2 + a.a4 + a.b4)};
    }
    case IdentityId::EQ12: {
      const auto t = theta_side(q, kDeg7);
      return {t.lhs, 2 * (t.x - t.y) * (2 + t.x2 + t.y2)};
    }
    case IdentityId::EQ13: {
      const auto a = algebraic(q, kDeg23);
      const ArbReal w = root_pow(a.prod, 1, 24);
      return {a.mp.x + a.mp.y + root_pow(ArbReal(2, prec), 2, 3) * w, ArbReal(1, prec)};
    }
    case IdentityId::EQ14: {
      const auto a = algebraic(q, kDeg23);
      const ArbReal& prod = a.prod;
      const ArbReal two(2, prec);
      const ArbReal bracket = 11 - 13 * root_pow(ArbReal(4, prec), 1, 3) * root_pow(prod, 1, 24) +
                              18 * root_pow(two, 1, 3) * root_pow(prod, 1, 12) - 14 * root_pow(prod, 1, 8) +
                              root_pow(two, 5, 3) * root_pow(prod, 1, 6);
      return {multiplier_side(a.m, kDeg23), 2 * (a.mp.x - a.mp.y) * bracket};
    }
    case IdentityId::EQ15_15: {
      const auto a = algebraic(q, kDeg15);
      return {a.mp.x + a.mp.y + a.xy8, a.s};
    }
    case IdentityId::EQ15_35: {
      const auto a = algebraic(q, kDeg35);
      return {a.mp.x + a.mp.y - a.xy8, a.s};
    }
    case IdentityId::EQ17: {
      const auto r = moduli::russell_triple(moduli::moduli_pair(q, kDeg15));
      return {r.P * (r.P * r.P - r.Q) + r.R, zero};
    }
    case IdentityId::EQ18: {
      const auto r = moduli::russell_triple(moduli::moduli_pair(q, kDeg35));
      return {r.P * (r.P * r.P + r.Q) + r.R, zero};
    }
    case IdentityId::EQ19: {
      const auto a = algebraic(q, kDeg15);
      const ArbReal& x = a.mp.x;
      const ArbReal& y = a.mp.y;
      return {multiplier_side(a.m, kDeg15),
              2 * (x - y) * (1 + 3 * (x + y) + 3 * (a.a4 + a.b4) + 2 * a.xy8 * (3 + x + y))};
    }
    case IdentityId::EQ20: {
      const auto a = algebraic(q, kDeg15);
      return {multiplier_side(a.m, kDeg15), 2 * (a.a4 - a.b4) * (4 * a.s + 4 - (a.a4 + a.b4))};
    }
    case IdentityId::EQ21: {
      const auto t = theta_side(q, kDeg15);
      return {t.lhs, 2 * (t.x2 - t.y2) * (4 * t.s + 4 - (t.x2 + t.y2))};
    }
    case IdentityId::EQ22_FD:
      return multiplier_law_sides(q, kDeg15);
    case IdentityId::EQ28: {
      const auto a = algebraic(q, kDeg15);
      const ArbReal& x = a.mp.x;
      const ArbReal& y = a.mp.y;
      const ArbReal bracket =
          1 + 3 * x + 3 * x * x + 3 * y + 6 * x * y + 2 * x * x * y + 3 * y * y + 2 * x * y * y;
      return {multiplier_side(a.m, kDeg15), 2 * (x - y) * bracket};
    }
    case IdentityId::EQ33_T: {
      const auto a = algebraic(q, kDeg15);
      const ArbReal t = 1 / (a.mp.x + a.mp.y);
      const ArbReal poly = 1 + 5 * t + 5 * t * t + 3 * t * t * t;
      return {multiplier_side(a.m, kDeg15), -sqrt(1 + t - t * t) * poly / root_pow(t, 7, 2)};
    }
    case IdentityId::EQ36: {
      const auto a = algebraic(q, kDeg15);
      const ArbReal x2 = a.mp.x * a.mp.x;
      const ArbReal y2 = a.mp.y * a.mp.y;
      return {multiplier_side(a.m, kDeg15), 2 * (x2 - y2) * (4 * a.s + 4 - x2 - y2)};
    }
    case IdentityId::EQ37: {
      const auto a = algebraic(q, kDeg15);
      const ArbReal ra = sqrt(1 - a.mp.alpha);
      const ArbReal rb = sqrt(1 - a.mp.beta);
      const ArbReal root2 = sqrt(ArbReal(2, prec));
      return {a.s, sqrt(1 - ra) / root2 * sqrt(1 - rb) / root2 + sqrt(1 + ra) / root2 * sqrt(1 + rb) / root2};
    }
    case IdentityId::EQ38: {
      const auto a = algebraic(q, kDeg15);
      return {a.s, theta_side(q, kDeg15).s};
    }
    case IdentityId::EQ39A: {
      const auto a = algebraic(q, kDeg15);
      return {a.a4, theta_side(q, kDeg15).x2};
    }
    case IdentityId::EQ39B: {
      const auto a = algebraic(q, kDeg15);
      return {a.b4, theta_side(q, kDeg15).y2};
    }
    case IdentityId::EQ40: {
      const auto a = algebraic(q, kDeg35);
      const ArbReal& x = a.mp.x;
      const ArbReal& y = a.mp.y;
      return {multiplier_side(a.m, kDeg35),
              2 * (x - y) * (1 - 3 * (x + y) + 3 * (a.a4 + a.b4) + 2 * a.xy8 * (3 - x - y)) / 3};
    }
    case IdentityId::EQ41: {
      const auto a = algebraic(q, kDeg35);
      return {multiplier_side(a.m, kDeg35), 2 * (a.a4 - a.b4) * (4 * a.s - 4 + (a.a4 + a.b4)) / 3};
    }
    case IdentityId::EQ42: {
      const auto t = theta_side(q, kDeg35);
      return {t.lhs, 2 * (t.x2 - t.y2) * (4 * t.s - 4 + (t.x2 + t.y2)) / 3};
    }
  }
  throw DomainError("unknown identity");
}

std::vector<IdentityInfo> build_catalog() {
  const mpq_class half(1, 2);
  // Past q = exp(-pi/sqrt(15)) ~ 0.4443 the roles of x and y swap and the
  // closed form of EQ33_T picks up the opposite sign.
  const mpq_class branch_limit(2, 5);
  using I = IdentityId;
  return {
      {I::EQ10, "EQ10", kDeg7, false, half, "(ab)^(1/8) + ((1-a)(1-b))^(1/8) = 1"},
      {I::EQ11, "EQ11", kDeg7, false, half, "m - 7/m = 2(x - y)(2 + (ab)^(1/4) + ((1-a)(1-b))^(1/4))"},
      {I::EQ12, "EQ12", kDeg7, true, half, "degree-7 multiplier equation in theta quotients"},
      {I::EQ13, "EQ13", kDeg23, false, half, "x + y + 2^(2/3) (xy)^(1/3) = 1"},
      {I::EQ14, "EQ14", kDeg23, false, half, "m - 23/m = 2(x - y)(11 - 13 4^(1/3) w + 18 2^(1/3) w^2 - 14 w^3 + 2^(5/3) w^4)"},
      {I::EQ15_15, "EQ15_15", kDeg15, false, half, "x + y + xy = sqrt((1 + sqrt(ab) + sqrt((1-a)(1-b)))/2)"},
      {I::EQ15_35, "EQ15_35", kDeg35, false, half, "x + y - xy = sqrt((1 + sqrt(ab) + sqrt((1-a)(1-b)))/2)"},
      {I::EQ17, "EQ17", kDeg15, false, half, "P(P^2 - Q) + R = 0"},
      {I::EQ18, "EQ18", kDeg35, false, half, "P(P^2 + Q) + R = 0"},
      {I::EQ19, "EQ19", kDeg15, false, half, "m - 15/m, natural form"},
      {I::EQ20, "EQ20", kDeg15, false, half, "m - 15/m, emphatic form"},
      {I::EQ21, "EQ21", kDeg15, true, half, "m - 15/m, theta-function form"},
      {I::EQ22_FD, "EQ22_FD", kDeg15, false, half, "n da/db = a(1-a) m^2 / (b(1-b)) by finite differences"},
      {I::EQ28, "EQ28", kDeg15, false, half, "m - 15/m = 2(x - y) L(x, y)"},
      {I::EQ33_T, "EQ33_T", kDeg15, false, branch_limit, "m - 15/m = -sqrt(1+t-t^2)(1+5t+5t^2+3t^3)/t^(7/2), t = 1/(x+y)"},
      {I::EQ36, "EQ36", kDeg15, false, half, "m - 15/m = 2(x^2 - y^2)(4 S + 4 - x^2 - y^2)"},
      {I::EQ37, "EQ37", kDeg15, false, half, "S as a product of half-angle radicals"},
      {I::EQ38, "EQ38", kDeg15, false, half, "S in theta quotients"},
      {I::EQ39A, "EQ39A", kDeg15, false, half, "(ab)^(1/4) in theta quotients"},
      {I::EQ39B, "EQ39B", kDeg15, false, half, "((1-a)(1-b))^(1/4) in theta quotients"},
      {I::EQ40, "EQ40", kDeg35, false, half, "m - 5/(3m), natural form"},
      {I::EQ41, "EQ41", kDeg35, false, half, "m - 5/(3m), emphatic form"},
      {I::EQ42, "EQ42", kDeg35, true, half, "m - 5/(3m), theta-function form"},
  };
}

}  // namespace

const std::vector<IdentityInfo>& catalog() {
  static const std::vector<IdentityInfo> entries = build_catalog();
  return entries;
}

const IdentityInfo& info(IdentityId id) { return catalog().at(static_cast<std::size_t>(id)); }

std::string_view tag(IdentityId id) { return info(id).tag; }

std::optional<IdentityId> parse_tag(std::string_view text) {
  for (const auto& entry : catalog()) {
    if (entry.tag == text) return entry.id;
  }
  return std::nullopt;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> ids;
  for (const auto& entry : catalog()) ids.push_back(entry.id);
  return ids;
}

Sides sides(IdentityId id, const QPoint& q, Precision prec) {
  const IdentityInfo& entry = info(id);
  if (q.value <= 0 || q.value > entry.max_q) {
    throw GridRangeError(std::string(entry.tag) + " is validated for 0 < q <= " + entry.max_q.get_str() +
                         ", got q = " + q.to_string());
  }
  return evaluate_sides(id, q.at(prec));
}

ArbReal residual(IdentityId id, const QPoint& q, Precision prec) { return sides(id, q, prec).residual(); }

ArbReal verify_eq22_fd(const ArbReal& q, int n, const ArbReal& h, DerivativeOrientation orientation) {
  const DegreePair d(1, n);
  if (!(h > 0)) throw StepTooSmall("finite-difference step must be positive");
  if (!(q - h > 0)) throw DomainError("q - h must stay positive");
  const ArbReal qp = q + h;
  const ArbReal qm = q - h;
  const ArbReal da = moduli::alpha_from_q(qp) - moduli::alpha_from_q(qm);
  const ArbReal db = moduli::alpha_from_q(pow(qp, n)) - moduli::alpha_from_q(pow(qm, n));
  const ArbReal alpha = moduli::alpha_from_q(q);
  const ArbReal beta = moduli::alpha_from_q(pow(q, n));

  // A difference carrying fewer than 16 significant bits is noise.
  ArbReal floor = beta;
  mpfr_mul_2si(floor.raw_mut(), floor.raw(), -(q.precision().effective() - 16), MPFR_RNDN);
  if (!(abs(db) > floor)) throw StepTooSmall("delta beta is below the rounding floor");
  if (da.is_zero()) throw StepTooSmall("delta alpha vanished");

  const ArbReal m = moduli::multiplier(q, d).m;
  const ArbReal rhs = alpha * (1 - alpha) * m * m / (beta * (1 - beta));
  const ArbReal lhs = orientation == DerivativeOrientation::AlphaByBeta ? n * da / db : n * db / da;
  return abs(lhs - rhs);
}

IdentityReport evaluate(IdentityId id, const QPoint& q, Precision prec, const ArbReal& tolerance) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report{id, q, std::nullopt, tolerance, false, prec.bits, 0.0, {}};
  try {
    ArbReal r = residual(id, q, prec);
    report.passed = r.is_zero_within(tolerance);
    report.residual = std::move(r);
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<LimitAnchor>& limit_anchors() {
  static const std::vector<LimitAnchor> anchors{
      {IdentityId::EQ11, mpq_class(-6)},      {IdentityId::EQ14, mpq_class(-22)},
      {IdentityId::EQ19, mpq_class(-14)},     {IdentityId::EQ20, mpq_class(-14)},
      {IdentityId::EQ40, mpq_class(-2, 3)},   {IdentityId::EQ41, mpq_class(-2, 3)},
  };
  return anchors;
}

std::vector<LimitCheck> check_limit_anchors(Precision prec) {
  const QPoint q(mpq_class(1, 1000000));
  const ArbReal tol = ArbReal::pow10(-4, prec);
  std::vector<LimitCheck> out;
  for (const auto& anchor : limit_anchors()) {
    Sides s = sides(anchor.id, q, prec);
    const ArbReal expected = ArbReal::from_rational(anchor.expected, prec);
    const bool ok = (s.lhs - expected).is_zero_within(tol) && (s.rhs - expected).is_zero_within(tol);
    out.push_back({anchor, std::move(s.lhs), std::move(s.rhs), ok});
  }
  return out;
}

}  // namespace modeq
