#include <doctest.h>

#include <set>

#include "modeq/grid.hpp"
#include "modeq/identities.hpp"
#include "support.hpp"

using namespace modeq;
using modeq::test::near;
using modeq::test::p100;
using modeq::test::rat;
using modeq::test::tol100;

TEST_CASE("catalog") {
  const auto& cat = catalog();
  CHECK(cat.size() == kIdentityCount);
  std::set<std::string_view> tags;
  for (const auto& entry : cat) {
    tags.insert(entry.tag);
    CHECK(parse_tag(entry.tag) == entry.id);
    CHECK(tag(entry.id) == entry.tag);
    CHECK(entry.max_q > 0);
    CHECK(entry.max_q <= mpq_class(1, 2));
  }
  CHECK(tags.size() == kIdentityCount);
  CHECK_FALSE(parse_tag("EQ99").has_value());
  CHECK(info(IdentityId::EQ12).theta_form);
  CHECK(info(IdentityId::EQ21).theta_form);
  CHECK(info(IdentityId::EQ42).theta_form);
  CHECK_FALSE(info(IdentityId::EQ19).theta_form);
  CHECK(info(IdentityId::EQ40).degrees == DegreePair(3, 5));
}

TEST_CASE("every identity holds on the default grid at 100 digits") {
  const auto reports = verify_catalog(all_identities(), default_grid(), p100(), tol100());
  CHECK(reports.size() == kIdentityCount * default_grid().size());
  for (const auto& r : reports) {
    INFO(tag(r.id), " q=", r.q.to_string(), " ", r.error);
    CHECK(r.passed);
    CHECK(r.precision_bits == 333);
  }
}

TEST_CASE("grid range") {
  CHECK_THROWS_AS(sides(IdentityId::EQ33_T, QPoint(mpq_class(1, 2)), p100()), GridRangeError);
  CHECK_THROWS_AS(sides(IdentityId::EQ19, QPoint(mpq_class(0)), p100()), GridRangeError);
  CHECK_THROWS_AS(sides(IdentityId::EQ19, QPoint(mpq_class(-1, 10)), p100()), GridRangeError);
  CHECK_THROWS_AS(sides(IdentityId::EQ19, QPoint(mpq_class(3, 5)), p100()), GridRangeError);
  const auto r = evaluate(IdentityId::EQ33_T, QPoint(mpq_class(1, 2)), p100(), tol100());
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.residual.has_value());
  CHECK_FALSE(r.error.empty());
}

TEST_CASE("validated range edges") {
  // x = y at q = exp(-pi/sqrt(15)) ~ 0.4443, so the t-form stops at 2/5.
  const ArbReal tol = tol100();
  CHECK(abs(residual(IdentityId::EQ33_T, QPoint(mpq_class(2, 5)), p100())) < tol);
  CHECK(abs(residual(IdentityId::EQ28, QPoint(mpq_class(1, 2)), p100())) < tol);
}

TEST_CASE("limit anchors at q = 1e-6") {
  const auto checks = check_limit_anchors(p100());
  CHECK(checks.size() == 6);
  for (const auto& c : checks) {
    INFO(tag(c.anchor.id));
    CHECK(c.passed);
  }
}

TEST_CASE("Russell forms and the radical form vanish together") {
  for (const QPoint& q : default_grid()) {
    CHECK(abs(residual(IdentityId::EQ17, q, p100())) < tol100());
    CHECK(abs(residual(IdentityId::EQ15_15, q, p100())) < tol100());
    CHECK(abs(residual(IdentityId::EQ18, q, p100())) < tol100());
    CHECK(abs(residual(IdentityId::EQ15_35, q, p100())) < tol100());
  }
}

TEST_CASE("the x, y restatement agrees with the natural form") {
  for (const QPoint& q : default_grid()) {
    const ArbReal a = residual(IdentityId::EQ28, q, p100());
    const ArbReal b = residual(IdentityId::EQ19, q, p100());
    CHECK(abs(a - b) < 2 * tol100());
  }
}

TEST_CASE("residual shrinks with precision") {
  const QPoint q(mpq_class(1, 10));
  const ArbReal lo = abs(residual(IdentityId::EQ19, q, Precision::from_digits(100)));
  const ArbReal hi = abs(residual(IdentityId::EQ19, q, Precision::from_digits(200)));
  CHECK(hi < ArbReal::pow10(-190, Precision::from_digits(200)));
  CHECK((lo.is_zero() || hi < lo));
}

TEST_CASE("finite-difference multiplier law") {
  const Precision prec = p100();
  const ArbReal q = rat(1, 20);
  for (int n : {7, 15}) {
    INFO("n=", n);
    const ArbReal coarse = verify_eq22_fd(q, n, ArbReal::pow10(-20, prec));
    const ArbReal fine = verify_eq22_fd(q, n, ArbReal::pow10(-25, prec));
    CHECK(fine < ArbReal::pow10(-20, prec));
    const ArbReal ratio = coarse / fine;
    CHECK(ratio > ArbReal::pow10(9, prec));
    CHECK(ratio < ArbReal::pow10(11, prec));
  }
  // Halving h quarters the error.
  const ArbReal r1 = verify_eq22_fd(q, 15, ArbReal::pow10(-10, prec));
  const ArbReal r2 = verify_eq22_fd(q, 15, ArbReal::pow10(-10, prec) / 2);
  CHECK(abs(r1 / r2 - 4) < rat(1, 100));
}

TEST_CASE("the swapped derivative orientation does not hold") {
  const Precision prec = p100();
  const ArbReal r = verify_eq22_fd(rat(1, 20), 15, ArbReal::pow10(-25, prec), DerivativeOrientation::BetaByAlpha);
  CHECK(r > 1);
}

TEST_CASE("step below the noise floor") {
  const Precision prec = p100();
  CHECK_THROWS_AS(verify_eq22_fd(rat(1, 20), 15, ArbReal::pow10(-200, prec)), StepTooSmall);
  CHECK_THROWS_AS(verify_eq22_fd(rat(1, 20), 15, ArbReal(prec)), StepTooSmall);
}

TEST_CASE("tolerance beyond working precision") {
  // Most residuals are a few ulps and fail; a residual that rounds to exactly
  // zero still passes, which happens for x + y = 1 when x is tiny.
  const ArbReal tight = ArbReal::pow10(-(p100().decimal_digits() + 50), p100());
  const auto reports = verify_grid(IdentityId::EQ10, default_grid(), p100(), tight);
  int failed = 0;
  for (const auto& r : reports) {
    REQUIRE(r.residual.has_value());
    CHECK(r.passed == r.residual->is_zero());
    failed += r.passed ? 0 : 1;
  }
  CHECK(failed > 0);
}

TEST_CASE("serial and parallel grids give identical reports") {
  const std::vector<IdentityId> ids{IdentityId::EQ11, IdentityId::EQ22_FD, IdentityId::EQ40, IdentityId::EQ13};
  const auto par = verify_catalog(ids, default_grid(), p100(), tol100());
  const auto ser = verify_catalog_serial(ids, default_grid(), p100(), tol100());
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].id == ser[i].id);
    CHECK(par[i].q == ser[i].q);
    CHECK(par[i].passed == ser[i].passed);
    REQUIRE(par[i].residual.has_value());
    CHECK(*par[i].residual == *ser[i].residual);
  }
}

TEST_CASE("catalog order is by tag then q") {
  std::vector<QPoint> grid{QPoint(mpq_class(1, 5)), QPoint(mpq_class(1, 50)), QPoint(mpq_class(1, 5))};
  const auto reports = verify_catalog({IdentityId::EQ40, IdentityId::EQ10, IdentityId::EQ40}, grid, p100(), tol100());
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].id == IdentityId::EQ10);
  CHECK(reports[0].q.value == mpq_class(1, 50));
  CHECK(reports[1].q.value == mpq_class(1, 5));
  CHECK(reports[3].id == IdentityId::EQ40);
}

TEST_CASE("empty grid") {
  CHECK_THROWS_AS(verify_grid(IdentityId::EQ10, {}, p100()), DomainError);
}
