// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "modeq/grid.hpp"
#include "modeq/hypergeom.hpp"
#include "modeq/identities.hpp"
#include "modeq/moduli.hpp"
#include "modeq/qseries.hpp"
#include "modeq/symbolic/proofs.hpp"

using namespace modeq;

namespace {

const Precision kPrec = Precision::from_digits(100);

ArbReal tol90() { return ArbReal::pow10(-90, kPrec); }
ArbReal rat(long n, long d) { return ArbReal::from_ratio(n, d, kPrec); }

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = secs < budget_s;
  const bool ok = out.ok && in_budget;
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s, budget %.0f s%s)\n", ok ? "PASS" : "FAIL", number, name, out.detail.c_str(),
              secs, budget_s, in_budget ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string sci(const ArbReal& x) { return x.to_scientific(3); }

}  // namespace

int main() {
  criterion(1, "identity suite, 23 identities on the default grid at 100 digits", 60, [] {
    const auto reports = verify_catalog_serial(all_identities(), default_grid(), kPrec, tol90());
    int passed = 0;
    ArbReal worst(kPrec);
    for (const auto& r : reports) {
      if (r.passed) ++passed;
      if (r.residual) worst = max(worst, abs(*r.residual));
    }
    const bool ok = passed == static_cast<int>(reports.size()) && reports.size() == kIdentityCount * 7;
    return Outcome{ok, std::to_string(passed) + "/" + std::to_string(reports.size()) +
                           " below 1e-90, worst |residual| " + sci(worst)};
  });

  criterion(2, "limit anchors at q = 1e-6 within 1e-4", 1, [] {
    const auto checks = check_limit_anchors(kPrec);
    std::string detail;
    bool ok = checks.size() == 6;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      detail += std::string(tag(c.anchor.id)) + "->" + c.anchor.expected.get_str() + (c.passed ? " " : "(x) ");
    }
    return Outcome{ok, detail};
  });

  criterion(3, "exact proof certificates", 10, [] {
    const symbolic::Poly c15 = symbolic::russell_to_curve(DegreePair(1, 15));
    const symbolic::Poly printed = symbolic::PrintedForms::printed().curve_15;
    bool ok = c15 == printed && printed.term_count() == 10;
    int zero = 0;
    for (const auto& step : symbolic::proof_steps()) {
      const auto c = symbolic::run_step(step, kPrec);
      if (c.passed()) ++zero;
    }
    ok = ok && zero == static_cast<int>(symbolic::proof_steps().size());
    return Outcome{ok, "curve has " + std::to_string(c15.term_count()) + " printed terms; " + std::to_string(zero) +
                           "/" + std::to_string(symbolic::proof_steps().size()) + " certificates exact zero"};
  });

  criterion(4, "hypergeometric bridge and degree relation", 60, [] {
    ArbReal worst(kPrec);
    for (long den : {50L, 20L}) {
      const ArbReal q = rat(1, den);
      const ArbReal ph = qseries::phi(q);
      worst = max(worst, abs(hypergeom::hyp2f1_half(moduli::alpha_from_q(q)) - ph * ph));
      const auto s = moduli::multiplier(q, DegreePair(1, 15));
      if (!s.m_hypergeom) return Outcome{false, "no hypergeometric multiplier"};
      worst = max(worst, abs(*s.m_hypergeom - s.m));
    }
    const ArbReal q = rat(1, 50);
    const auto mp = moduli::moduli_pair(q, DegreePair(1, 15));
    const ArbReal rel = hypergeom::period_ratio(Modulus(mp.beta)) - 15 * hypergeom::period_ratio(Modulus(mp.alpha));
    worst = max(worst, abs(rel));
    return Outcome{worst < tol90(), "worst deviation " + sci(worst)};
  });

  criterion(5, "nome roundtrip", 60, [] {
    ArbReal worst(kPrec);
    for (long den : {50L, 20L, 10L}) {
      const ArbReal q = rat(1, den);
      worst = max(worst, abs(hypergeom::nome(Modulus(moduli::alpha_from_q(q))) - q));
    }
    worst = max(worst, abs(moduli::alpha_from_q(exp(-ArbReal::pi(kPrec))) - rat(1, 2)));
    return Outcome{worst < tol90(), "worst deviation " + sci(worst)};
  });

  criterion(6, "theta series versus triple product, 5 random pairs with |ab| <= 0.3", 60, [] {
    std::mt19937 rng(15);
    std::uniform_int_distribution<long> num(-95, 95);
    ArbReal worst(kPrec);
    int n = 0;
    std::string pairs;
    while (n < 5) {
      const long an = num(rng), bn = num(rng);
      if (an == 0 || bn == 0 || std::labs(an * bn) > 3000) continue;
      const ArbReal a = rat(an, 100), b = rat(bn, 100);
      worst = max(worst, abs(qseries::theta_f(a, b) - qseries::theta_f_product(a, b)));
      pairs += "(" + std::to_string(an) + "/100," + std::to_string(bn) + "/100) ";
      ++n;
    }
    return Outcome{worst < tol90(), pairs + "worst " + sci(worst)};
  });

  criterion(7, "finite-difference multiplier law, n in {7, 15}", 60, [] {
    const ArbReal q = rat(1, 20);
    bool ok = true;
    std::string detail;
    for (int n : {7, 15}) {
      const ArbReal coarse = verify_eq22_fd(q, n, ArbReal::pow10(-20, kPrec));
      const ArbReal fine = verify_eq22_fd(q, n, ArbReal::pow10(-25, kPrec));
      const double order = std::log10((coarse / fine).to_double()) / 5.0;
      ok = ok && fine < ArbReal::pow10(-20, kPrec) && order > 1.8 && order < 2.2;
      detail += "n=" + std::to_string(n) + ": " + sci(fine) + " at h=1e-25, order " + std::to_string(order) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(8, "coefficient mutations break their certificates", 30, [] {
    using symbolic::PrintedForms;
    using symbolic::Poly;
    int caught = 0;
    std::string missed;
    auto expect_broken = [&](const char* what, bool broken) {
      if (broken) ++caught;
      else missed += std::string(what) + " ";
    };
    symbolic::Exponents xy{};
    xy[static_cast<std::size_t>(symbolic::Var::x)] = 1;
    xy[static_cast<std::size_t>(symbolic::Var::y)] = 1;

    PrintedForms curve = PrintedForms::printed();
    curve.curve_15 = curve.curve_15 + Poly::monomial(1, xy);
    expect_broken("curve", !symbolic::prove_russell_to_curve(curve).exact_zero);

    PrintedForms bracket = PrintedForms::printed();
    bracket.bracket = bracket.bracket - Poly::monomial(1, xy);
    expect_broken("bracket", !symbolic::prove_eq34(bracket).exact_zero);

    PrintedForms squared = PrintedForms::printed();
    squared.squared_cubic = symbolic::UPoly{1, 5, 4, 3};
    expect_broken("squared", !symbolic::prove_eq32(squared).exact_zero);

    PrintedForms signed_form = PrintedForms::printed();
    signed_form.signed_cubic = symbolic::UPoly{1, 5, 5, 2};
    expect_broken("signed", !symbolic::prove_eq33_consistency(kPrec, signed_form).exact_zero);

    PrintedForms factor = PrintedForms::printed();
    factor.factor_cofactor = factor.factor_cofactor + Poly::var(symbolic::Var::x);
    expect_broken("factorization", !symbolic::prove_eq34(factor).exact_zero);

    return Outcome{caught == 5, std::to_string(caught) + "/5 mutations detected" +
                                    (missed.empty() ? std::string() : "; missed " + missed)};
  });

  criterion(9, "end-to-end parameterization at q in {1/20, 1/10}", 60, [] {
    ArbReal worst(kPrec);
    for (long den : {20L, 10L}) {
      const ArbReal q = rat(1, den);
      const auto mp = moduli::moduli_pair(q, DegreePair(1, 15));
      const ArbReal m = moduli::multiplier(q, DegreePair(1, 15)).m;
      const ArbReal t = 1 / (mp.x + mp.y);
      const ArbReal rho = mp.y - mp.x;
      worst = max(worst, abs(t * rho * rho - (1 + t - t * t)));
      const ArbReal closed = -sqrt(1 + t - t * t) * (1 + 5 * t + 5 * t * t + 3 * t * t * t) / root_pow(t, 7, 2);
      worst = max(worst, abs(closed - (m - 15 / m)));
    }
    return Outcome{worst < tol90(), "worst deviation " + sci(worst) + " (closed form taken with the minus sign)"};
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
