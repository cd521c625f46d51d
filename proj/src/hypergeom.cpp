#include "modeq/hypergeom.hpp"

namespace modeq {

Modulus::Modulus(ArbReal a) : alpha(std::move(a)) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("modulus must lie in (0, 1)");
}

namespace hypergeom {

namespace {

void require_unit_interval(const ArbReal& x) {
  if (x.sign() < 0) throw DomainError("2F1(1/2,1/2;1;x) needs x >= 0");
  if (!(x < 1)) throw DomainError("2F1(1/2,1/2;1;x) diverges at x >= 1");
}

ArbReal two_to(long e, Precision prec) {
  ArbReal out(prec);
  mpfr_set_ui_2exp(out.raw_mut(), 1, e, MPFR_RNDN);
  return out;
}

// Series when the argument is comfortably below 1, AGM otherwise.
ArbReal complete_period(const ArbReal& x) {
  if (x.to_double() <= kSeriesCutoff) return hyp2f1_half(x);
  return hyp2f1_half_agm(x);
}

}  // namespace

ArbReal hyp2f1_half(const ArbReal& x) {
  require_unit_interval(x);
  const Precision prec = x.precision();
  ArbReal sum(1, prec);
  if (x.is_zero()) return sum;
  const ArbReal eps = two_to(-prec.effective(), prec);
  const ArbReal tail_factor = x / (1 - x);
  ArbReal term(1, prec);
  for (long k = 0;; ++k) {
    term *= x;
    term *= (2 * k + 1) * (2 * k + 1);
    term /= (2 * k + 2) * (2 * k + 2);
    sum += term;
    // Ratios of later terms stay below x, so the tail is at most term * x / (1 - x).
    if (term * tail_factor < eps * sum) break;
  }
  return sum;
}

ArbReal hyp2f1_half_agm(const ArbReal& x) {
  require_unit_interval(x);
  const Precision prec = x.precision();
  const ArbReal eps = two_to(-prec.effective() + 2, prec);
  ArbReal a(1, prec);
  ArbReal b = sqrt(1 - x);
  while (abs(a - b) > eps * a) {
    ArbReal next_a = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next_a);
  }
  return 1 / ((a + b) / 2);
}

ArbReal period_ratio(const Modulus& m) {
  return complete_period(1 - m.alpha) / complete_period(m.alpha);
}

ArbReal nome(const Modulus& m) {
  return exp(-ArbReal::pi(m.alpha.precision()) * period_ratio(m));
}

}  // namespace hypergeom
}  // namespace modeq
