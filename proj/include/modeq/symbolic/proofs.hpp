#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modeq/moduli.hpp"
#include "modeq/numerics.hpp"
#include "modeq/symbolic/poly.hpp"
#include "modeq/symbolic/radical.hpp"
#include "modeq/symbolic/upoly.hpp"

namespace modeq::symbolic {

/// Outcome of one proof step.
struct Certificate {
  std::string step;
  /// The symbolic difference reduced to the canonical zero.
  bool exact_zero = false;
  /// Numeric spot checks attached to the step; true when there are none.
  bool numeric_ok = true;
  /// "0" or the rendered nonzero remainder.
  std::string remainder = "0";
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return exact_zero && numeric_ok; }
};

/// The printed forms the degree-15 proof chain is checked against. Tests
/// alter single coefficients to confirm each certificate notices.
struct PrintedForms {
  /// Degree-15 curve C(x, y) = 0.
  Poly curve_15;
  /// L(x, y) with m - 15/m = 2(x - y) L.
  Poly bracket;
  /// t rho^2 = conic(t).
  UPoly conic;
  /// (m - 15/m)^2 = squared_radicand * squared_cubic^2 / t^squared_t_power.
  UPoly squared_radicand;
  UPoly squared_cubic;
  int squared_t_power = 7;
  /// m - 15/m = signed_sign * sqrt(squared_radicand) * signed_cubic / t^(7/2).
  int signed_sign = -1;
  UPoly signed_cubic;
  /// L - C = (x + y) * factor_cofactor.
  Poly factor_cofactor;
  /// n in the multiplier law.
  mpq_class degree = 15;

  static PrintedForms printed();
};

/// Derived (3,5) objects, frozen after the derivation and re-checked by
/// prove_param_35.
namespace golden {
Poly curve_35();
/// t rho^2 = t^2 + t - 1.
UPoly conic_35();
/// m - 5/(3m) = -sqrt(conic_35) * closed_cubic_35 / (3 t^(7/2)).
UPoly closed_cubic_35();
}  // namespace golden

/// Expands P(P^2 -+ Q) + R under P = 1 +- (x + y), Q = 4(x + y +- xy),
/// R = r_coeff * xy, the sign fixed by the pair. pair must be (1,15) or (3,5).
Poly russell_to_curve(DegreePair pair, const mpq_class& r_coeff = 4);

/// x = (1 - uv)/(2t), y = (1 + uv)/(2t) over the tower with u^2 = conic(t):
/// the x < y branch with rho = y - x = uv/t.
struct CurveParam {
  std::shared_ptr<const RadicalTower> tower;
  RadElem x;
  RadElem y;
};
CurveParam parameterize(const UPoly& conic);

/// -n N^2 and D where (m - n/m)^2 = -n N^2 / D after alpha, beta are
/// eliminated through their symmetric functions in x^8 and y^8.
struct MultiplierQuotient {
  RadElem numerator;
  RadElem denominator;
};
MultiplierQuotient multiplier_quotient(const CurveParam& param, const mpq_class& n);

Certificate prove_russell_to_curve(const PrintedForms& forms = PrintedForms::printed());
Certificate prove_eq30(const PrintedForms& forms = PrintedForms::printed());
Certificate prove_eq32(const PrintedForms& forms = PrintedForms::printed());
Certificate prove_eq33_consistency(Precision prec, const PrintedForms& forms = PrintedForms::printed());
Certificate prove_eq34(const PrintedForms& forms = PrintedForms::printed());
Certificate prove_eq15_equivalence(DegreePair pair, const PrintedForms& forms = PrintedForms::printed());
Certificate prove_param_35(Precision prec);

/// CLI step names in execution order.
const std::vector<std::string>& proof_steps();
/// Throws ConfigError for an unknown step name.
Certificate run_step(const std::string& step, Precision prec);

}  // namespace modeq::symbolic
