#include <doctest.h>

#include "modeq/grid.hpp"
#include "modeq/moduli.hpp"
#include "modeq/qseries.hpp"
#include "support.hpp"

using namespace modeq;
using modeq::test::dec;
using modeq::test::near;
using modeq::test::p100;
using modeq::test::rat;
using modeq::test::tol100;

TEST_CASE("degree pairs") {
  CHECK_NOTHROW(DegreePair(1, 15));
  CHECK_NOTHROW(DegreePair(3, 5));
  CHECK_THROWS_AS(DegreePair(2, 4), DomainError);
  CHECK_THROWS_AS(DegreePair(15, 1), DomainError);
  CHECK_THROWS_AS(DegreePair(0, 7), DomainError);
  CHECK_THROWS_AS(DegreePair(5, 5), DomainError);
  CHECK(DegreePair(3, 5).degree() == mpq_class(5, 3));
}

TEST_CASE("russell sign") {
  CHECK(moduli::russell_sign(DegreePair(1, 7)) == -1);
  CHECK(moduli::russell_sign(DegreePair(1, 15)) == 1);
  CHECK(moduli::russell_sign(DegreePair(3, 5)) == -1);
  CHECK(moduli::russell_sign(DegreePair(1, 23)) == -1);
  CHECK_THROWS_AS(moduli::russell_sign(DegreePair(1, 2)), SignUndefined);
}

TEST_CASE("alpha reference values") {
  CHECK(near(moduli::alpha_from_q(rat(1, 10)), dec("0.802403298217576211687564399"), ArbReal::pow10(-26, p100())));
  CHECK(near(moduli::alpha_from_q(exp(-ArbReal::pi(p100()))), rat(1, 2), tol100()));
  CHECK_THROWS_AS(moduli::alpha_from_q(ArbReal(p100())), DomainError);
  CHECK_THROWS_AS(moduli::alpha_from_q(rat(-1, 10)), DomainError);
  CHECK_THROWS_AS(moduli::alpha_from_q(ArbReal(1, p100())), DomainError);
}

TEST_CASE("alpha and its complement sum to one") {
  for (const QPoint& q : default_grid()) {
    const ArbReal qq = q.at(p100());
    CHECK(near(moduli::alpha_from_q(qq) + moduli::alpha_complement_from_q(qq), ArbReal(1, p100()), tol100()));
  }
}

TEST_CASE("alpha increases with q") {
  ArbReal prev = moduli::alpha_from_q(rat(1, 100));
  for (long k = 5; k < 100; k += 10) {
    const ArbReal cur = moduli::alpha_from_q(rat(k, 100));
    CHECK(cur > prev);
    CHECK(cur < 1);
    prev = cur;
  }
}

TEST_CASE("moduli pair") {
  const auto mp = moduli::moduli_pair(rat(1, 10), DegreePair(1, 15));
  CHECK(mp.beta < mp.alpha);
  CHECK(mp.x > 0);
  CHECK(mp.x < mp.y);
  CHECK(mp.y < 1);
  CHECK(near(pow(mp.x, 8), mp.alpha * mp.beta, tol100()));
  CHECK(near(pow(mp.y, 8), (1 - mp.alpha) * (1 - mp.beta), tol100()));
}

TEST_CASE("multiplier") {
  const auto s = moduli::multiplier(rat(1, 20), DegreePair(1, 15));
  REQUIRE(s.m_hypergeom.has_value());
  CHECK(near(s.m, *s.m_hypergeom, tol100()));
  CHECK(s.degree == 15);
  const ArbReal q = rat(1, 20);
  const ArbReal p1 = qseries::phi(q), p15 = qseries::phi(pow(q, 15));
  CHECK(near(s.m, p1 * p1 / (p15 * p15), tol100()));
  CHECK_FALSE(moduli::multiplier(rat(1, 4), DegreePair(1, 15)).m_hypergeom.has_value());
  CHECK_FALSE(moduli::multiplier(rat(1, 20), DegreePair(3, 5)).m_hypergeom.has_value());
}

TEST_CASE("russell triple") {
  const auto mp = moduli::moduli_pair(rat(1, 10), DegreePair(1, 15));
  const auto r = moduli::russell_triple(mp);
  CHECK(r.sign == 1);
  CHECK(near(r.P, 1 + mp.x + mp.y, tol100()));
  CHECK(near(r.R, 4 * mp.x * mp.y, tol100()));
  CHECK_THROWS_AS(moduli::russell_triple(moduli::moduli_pair(rat(1, 10), DegreePair(1, 2))), SignUndefined);
}
