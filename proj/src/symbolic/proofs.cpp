#include "modeq/symbolic/proofs.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "modeq/errors.hpp"

namespace modeq::symbolic {

namespace {

Poly X() { return Poly::var(Var::x); }
Poly Y() { return Poly::var(Var::y); }
Poly T() { return Poly::var(Var::t); }
Poly Rho() { return Poly::var(Var::rho); }

Poly xy_term(long c, unsigned i, unsigned j) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::x)] = static_cast<std::uint16_t>(i);
  e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint16_t>(j);
  return Poly::monomial(c, e);
}

Poly sum(std::initializer_list<Poly> terms) {
  Poly out;
  for (const auto& p : terms) out += p;
  return out;
}

RatFunc over_t_power(const UPoly& num, int k) { return RatFunc(num, UPoly::monomial(1, k)); }

RadElem constant(const std::shared_ptr<const RadicalTower>& tower, const RatFunc& c) { return RadElem(tower, c); }

RadElem uv_coeff(const std::shared_ptr<const RadicalTower>& tower, const RatFunc& c) {
  RadElem e(tower);
  e.set_coeff(RadElem::UV, c);
  return e;
}

std::string render(const Poly& p) { return p.is_zero() ? "0" : p.to_string(); }
std::string render(const RadElem& e) { return e.is_zero() ? "0" : e.to_string(); }

// Records one exact-zero test; the first nonzero remainder is kept.
void expect_zero(Certificate& c, const std::string& what, bool zero, const std::string& text) {
  if (!zero) {
    if (c.exact_zero || c.remainder == "0") c.remainder = what + ": " + text;
    c.exact_zero = false;
  }
  c.notes.push_back(what + (zero ? ": 0" : ": nonzero"));
}

void expect_zero(Certificate& c, const std::string& what, const Poly& p) {
  expect_zero(c, what, p.is_zero(), render(p));
}

void expect_zero(Certificate& c, const std::string& what, const RadElem& e) {
  expect_zero(c, what, e.is_zero(), render(e));
}

bool close(const ArbReal& a, const ArbReal& b, Precision prec) {
  const ArbReal scale = max(ArbReal(1, prec), abs(b));
  return abs(a - b) <= default_tolerance(prec) * scale;
}

void expect_numeric(Certificate& c, const std::string& what, bool ok) {
  if (!ok) c.numeric_ok = false;
  c.notes.push_back(what + (ok ? ": ok" : ": FAILED"));
}

Certificate timed(const std::string& step, const std::function<void(Certificate&)>& body) {
  Certificate c;
  c.step = step;
  c.exact_zero = true;
  const auto start = std::chrono::steady_clock::now();
  body(c);
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

// x = (1 - t rho)/(2t), y = (1 + t rho)/(2t), denominators cleared.
Poly substitute_rho(const Poly& curve) {
  return curve.substitute_fraction({{Var::x, 1 - T() * Rho()}, {Var::y, 1 + T() * Rho()}}, 2 * T());
}

Poly conic_relation(const UPoly& conic) { return T() * Rho().pow(2) - Poly::from_univariate(conic, Var::t); }

const DegreePair kDeg15(1, 15);
const DegreePair kDeg35(3, 5);

}  // namespace

PrintedForms PrintedForms::printed() {
  PrintedForms f;
  f.curve_15 = sum({Poly(1), xy_term(-1, 1, 0), xy_term(-1, 2, 0), xy_term(1, 3, 0), xy_term(-1, 0, 1),
                    xy_term(-2, 1, 1), xy_term(-1, 2, 1), xy_term(-1, 0, 2), xy_term(-1, 1, 2), xy_term(1, 0, 3)});
  f.bracket = sum({Poly(1), xy_term(3, 1, 0), xy_term(3, 2, 0), xy_term(3, 0, 1), xy_term(6, 1, 1),
                   xy_term(2, 2, 1), xy_term(3, 0, 2), xy_term(2, 1, 2)});
  f.conic = UPoly{1, 1, -1};
  f.squared_radicand = UPoly{1, 1, -1};
  f.squared_cubic = UPoly{1, 5, 5, 3};
  f.squared_t_power = 7;
  f.signed_sign = -1;
  f.signed_cubic = UPoly{1, 5, 5, 3};
  f.factor_cofactor = 4 * (X() + Y() + X() * Y()) + 4 - X().pow(2) - Y().pow(2);
  f.degree = 15;
  return f;
}

namespace golden {

Poly curve_35() {
  return sum({Poly(1), xy_term(1, 1, 0), xy_term(1, 0, 1), xy_term(-1, 2, 0), xy_term(-2, 1, 1),
              xy_term(-1, 0, 2), xy_term(-1, 3, 0), xy_term(1, 2, 1), xy_term(1, 1, 2), xy_term(-1, 0, 3)});
}

UPoly conic_35() { return UPoly{-1, 1, 1}; }

UPoly closed_cubic_35() { return UPoly{-1, 5, -5, 3}; }

}  // namespace golden

Poly russell_to_curve(DegreePair pair, const mpq_class& r_coeff) {
  int s = 0;
  if (pair == kDeg15) s = 1;
  else if (pair == kDeg35) s = -1;
  else throw DomainError("Russell expansion is implemented for (1,15) and (3,5) only, got " + pair.to_string());

  const Poly P = Poly::var(Var::P);
  const Poly Q = Poly::var(Var::Q);
  const Poly R = Poly::var(Var::R);
  const Poly form = P * (P.pow(2) - s * Q) + R;

  const Poly sxy = X() + Y();
  Poly out = form.substitute(Var::P, 1 + s * sxy);
  out = out.substitute(Var::Q, 4 * (sxy + s * X() * Y()));
  out = out.substitute(Var::R, Poly(r_coeff) * X() * Y());
  return out;
}

CurveParam parameterize(const UPoly& conic) {
  auto tower = std::make_shared<const RadicalTower>(conic);
  const RatFunc half_over_t(UPoly::constant(1), UPoly::monomial(2, 1));
  const RadElem one = constant(tower, half_over_t);
  const RadElem uv = uv_coeff(tower, half_over_t);
  return {tower, one - uv, one + uv};
}

MultiplierQuotient multiplier_quotient(const CurveParam& param, const mpq_class& n) {
  const auto& tower = param.tower;
  const RadElem& x = param.x;
  const RadElem& y = param.y;
  const RadElem x8 = x.pow(8);
  const RadElem y8 = y.pow(8);
  const RadElem one = constant(tower, RatFunc(1));
  const RadElem two = constant(tower, RatFunc(2));

  // alpha + beta = 1 + x^8 - y^8, alpha beta = x^8, (1-alpha)(1-beta) = y^8.
  const RadElem sum_ab = one + x8 - y8;
  const RadElem a = y * x.derivative();
  const RadElem b = x * y.derivative();
  const RadElem num = sum_ab * a + (two - sum_ab) * b;
  const RadElem den = x8 * a * a + (one - x8 - y8) * a * b + y8 * b * b;
  return {num * num * RatFunc(-n), den};
}

Certificate prove_russell_to_curve(const PrintedForms& forms) {
  return timed("russell-to-curve", [&](Certificate& c) {
    const Poly c15 = russell_to_curve(kDeg15);
    expect_zero(c, "(1,15) expansion - printed curve", c15 - forms.curve_15);
    c.notes.push_back("(1,15) curve: " + render(c15));

    const Poly c35 = russell_to_curve(kDeg35);
    expect_zero(c, "(3,5) expansion - frozen cubic", c35 - golden::curve_35());
    c.notes.push_back("(3,5) curve: " + render(c35));

    for (const auto* p : {&c15, &c35}) {
      const bool cubic = p->degree_in(Var::x) == 3 && p->degree_in(Var::y) == 3 && p->has_integer_coefficients();
      expect_numeric(c, "cubic in x and y with integer coefficients", cubic);
      expect_numeric(c, "vanishes at (x, y) = (0, 1)", p->eval({{Var::x, 0}, {Var::y, 1}}) == 0);
    }
  });
}

Certificate prove_eq30(const PrintedForms& forms) {
  return timed("eq30", [&](Certificate& c) {
    const Poly sub = substitute_rho(forms.curve_15);
    c.notes.push_back("cleared curve: " + render(sub));
    const auto div = divide(sub, {conic_relation(forms.conic)});
    expect_zero(c, "curve mod (t rho^2 - conic)", div.remainder);
    c.notes.push_back("quotient: " + render(div.quotients[0]));

    // t = 1 gives x = 0, y = 1, rho = 1.
    const mpq_class t0 = 1, rho0 = 1;
    const mpq_class x0 = (1 / t0 - rho0) / 2, y0 = (1 / t0 + rho0) / 2;
    const bool spot = x0 == 0 && y0 == 1 && t0 * rho0 * rho0 == forms.conic.eval(t0) &&
                      forms.curve_15.eval({{Var::x, x0}, {Var::y, y0}}) == 0;
    expect_numeric(c, "t = 1, rho = 1 lies on the curve and the conic", spot);
  });
}

Certificate prove_eq32(const PrintedForms& forms) {
  return timed("eq32", [&](Certificate& c) {
    const CurveParam param = parameterize(forms.conic);
    const MultiplierQuotient mq = multiplier_quotient(param, forms.degree);
    const RatFunc rhs = RatFunc(forms.squared_radicand * forms.squared_cubic.pow(2)) *
                        over_t_power(UPoly::constant(1), forms.squared_t_power);
    const RadElem target = constant(param.tower, rhs);
    const RatFunc clear(UPoly::monomial(1, forms.squared_t_power));
    expect_zero(c, "t^7 (-n N^2 - rhs D)", (mq.numerator - target * mq.denominator) * clear);
    c.notes.push_back("rhs at t = 1: " + rhs.eval(mpq_class(1)).get_str());
  });
}

Certificate prove_eq33_consistency(Precision prec, const PrintedForms& forms) {
  return timed("eq33", [&](Certificate& c) {
    const CurveParam param = parameterize(forms.conic);
    const auto& tower = param.tower;
    // sqrt(U) / t^(7/2) = uv / t^4.
    const RadElem signed_rhs =
        uv_coeff(tower, over_t_power(forms.signed_cubic * mpq_class(forms.signed_sign), 4));
    const RadElem squared_rhs = constant(tower, RatFunc(forms.squared_radicand * forms.squared_cubic.pow(2)) *
                                                    over_t_power(UPoly::constant(1), forms.squared_t_power));
    expect_zero(c, "signed^2 - squared", signed_rhs * signed_rhs - squared_rhs);

    const RadElem bracket = substitute(forms.bracket, {{Var::x, param.x}, {Var::y, param.y}}, tower);
    const RadElem two(tower, RatFunc(2));
    expect_zero(c, "2(x - y) L - signed", two * (param.x - param.y) * bracket - signed_rhs);

    const ArbReal at_one = signed_rhs.evaluate(ArbReal(1, prec));
    expect_numeric(c, "signed rhs at t = 1 is -14", close(at_one, ArbReal(-14, prec), prec));

    const ArbReal q = ArbReal::from_ratio(1, 10, prec);
    const ModuliPair mp = moduli::moduli_pair(q, kDeg15);
    const MultiplierSample ms = moduli::multiplier(q, kDeg15);
    const ArbReal lhs = ms.m - 15 / ms.m;
    const ArbReal value = signed_rhs.evaluate(1 / (mp.x + mp.y));
    expect_numeric(c, "x < y at q = 1/10", mp.x < mp.y);
    expect_numeric(c, "signed rhs < 0 at q = 1/10", value.sign() < 0);
    expect_numeric(c, "signed rhs = m - 15/m at q = 1/10", close(value, lhs, prec));
    c.notes.push_back("m - 15/m at q = 1/10: " + lhs.to_string(20));
  });
}

Certificate prove_eq34(const PrintedForms& forms) {
  return timed("eq34", [&](Certificate& c) {
    const Poly diff = forms.bracket - forms.curve_15 - (X() + Y()) * forms.factor_cofactor;
    expect_zero(c, "L - C - (x + y) * cofactor", diff);
    const std::map<Var, mpq_class> at{{Var::x, 0}, {Var::y, 1}};
    expect_numeric(c, "L(0,1) = 7, C(0,1) = 0",
                   forms.bracket.eval(at) == 7 && forms.curve_15.eval(at) == 0);
  });
}

Certificate prove_eq15_equivalence(DegreePair pair, const PrintedForms& forms) {
  const bool deg15 = pair == kDeg15;
  if (!deg15 && !(pair == kDeg35)) throw DomainError("equivalence is implemented for (1,15) and (3,5) only");
  return timed(deg15 ? "eq15-equiv-15" : "eq15-equiv-35", [&](Certificate& c) {
    const Poly curve = deg15 ? forms.curve_15 : russell_to_curve(kDeg35);
    const int s = deg15 ? 1 : -1;
    const Poly g = 2 * (X() + Y() + s * X() * Y()).pow(2) - (1 + X().pow(4) + Y().pow(4));
    const auto div = divide(g, {curve});
    expect_zero(c, "2(x + y +- xy)^2 - (1 + x^4 + y^4) mod curve", div.remainder);
    c.notes.push_back("quotient: " + render(div.quotients[0]));
    expect_numeric(c, "vanishes at (0, 1)", g.eval({{Var::x, 0}, {Var::y, 1}}) == 0);
  });
}

Certificate prove_param_35(Precision prec) {
  return timed("param-35", [&](Certificate& c) {
    const Poly curve = russell_to_curve(kDeg35);
    expect_zero(c, "expansion - frozen cubic", curve - golden::curve_35());

    // Conic: the substituted cubic must be A(t) rho^2 + B(t).
    const Poly sub = substitute_rho(curve);
    const auto by_rho = sub.collect(Var::rho);
    bool even = true;
    for (const auto& [k, coeff] : by_rho) even = even && (k == 0 || k == 2);
    expect_zero(c, "odd or higher powers of rho", even, render(sub));
    UPoly conic;
    if (even && by_rho.count(2) && by_rho.count(0)) {
      const RatFunc p(by_rho.at(0).to_univariate(Var::t) * UPoly::t() * mpq_class(-1),
                      by_rho.at(2).to_univariate(Var::t));
      expect_zero(c, "derived conic is a polynomial", p.is_polynomial(), p.to_string());
      conic = p.num();
      c.notes.push_back("derived conic: t rho^2 = " + conic.to_string());
    } else {
      expect_zero(c, "rho^2 and rho^0 parts present", false, render(sub));
      return;
    }
    expect_zero(c, "derived conic - frozen conic", conic == golden::conic_35(),
                (conic - golden::conic_35()).to_string());
    expect_zero(c, "cubic mod (t rho^2 - conic)", divide(sub, {conic_relation(conic)}).remainder);
    expect_numeric(c, "t = 1, rho = 1 on the conic", conic.eval(mpq_class(1)) == 1);

    const CurveParam param = parameterize(conic);
    const auto& tower = param.tower;
    const RadElem closed =
        uv_coeff(tower, over_t_power(golden::closed_cubic_35(), 4) * RatFunc(mpq_class(-1, 3)));
    const Poly bracket_35 = 1 - 3 * (X() + Y()) + 3 * (X().pow(2) + Y().pow(2)) + 2 * X() * Y() * (3 - X() - Y());
    const RadElem natural = RadElem(tower, RatFunc(mpq_class(2, 3))) * (param.x - param.y) *
                            substitute(bracket_35, {{Var::x, param.x}, {Var::y, param.y}}, tower);
    expect_zero(c, "(2/3)(x - y) L35 - closed", natural - closed);

    const mpq_class n(5, 3);
    const MultiplierQuotient mq = multiplier_quotient(param, n);
    expect_zero(c, "-n N^2 - closed^2 D", mq.numerator - closed * closed * mq.denominator);
    c.notes.push_back("closed form: -sqrt(" + conic.to_string() + ")(" + golden::closed_cubic_35().to_string() +
                      ")/(3 t^(7/2))");

    expect_numeric(c, "closed form at t = 1 is -2/3",
                   close(closed.evaluate(ArbReal(1, prec)), ArbReal::from_ratio(-2, 3, prec), prec));
    for (long den : {20L, 10L}) {
      const ArbReal q = ArbReal::from_ratio(1, den, prec);
      const ModuliPair mp = moduli::moduli_pair(q, kDeg35);
      const MultiplierSample ms = moduli::multiplier(q, kDeg35);
      const ArbReal lhs = ms.m - ArbReal::from_rational(n, prec) / ms.m;
      const ArbReal t0 = 1 / (mp.x + mp.y);
      const std::string at = " at q = 1/" + std::to_string(den);
      expect_numeric(c, "closed form = m - 5/(3m)" + at, close(closed.evaluate(t0), lhs, prec));
      expect_numeric(c, "-n N^2 / D = (m - 5/(3m))^2" + at,
                     close(mq.numerator.evaluate(t0) / mq.denominator.evaluate(t0), lhs * lhs, prec));
    }
  });
}

const std::vector<std::string>& proof_steps() {
  static const std::vector<std::string> steps{"russell-to-curve", "eq30",          "eq32",          "eq33",
                                              "eq34",             "eq15-equiv-15", "eq15-equiv-35", "param-35"};
  return steps;
}

Certificate run_step(const std::string& step, Precision prec) {
  if (step == "russell-to-curve") return prove_russell_to_curve();
  if (step == "eq30") return prove_eq30();
  if (step == "eq32") return prove_eq32();
  if (step == "eq33") return prove_eq33_consistency(prec);
  if (step == "eq34") return prove_eq34();
  if (step == "eq15-equiv-15") return prove_eq15_equivalence(kDeg15);
  if (step == "eq15-equiv-35") return prove_eq15_equivalence(kDeg35);
  if (step == "param-35") return prove_param_35(prec);
  throw ConfigError("unknown proof step '" + step + "'");
}

}  // namespace modeq::symbolic
