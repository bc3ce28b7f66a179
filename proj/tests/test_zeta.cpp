#include "padicl/bernoulli.hpp"
#include "padicl/zeta.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("zeta") {
  TEST_CASE("nonpositive arguments are exact") {
    // -B_1(1/5) * omega(1/5)^{-1} = (3/10) * 5
    ZetaNonpos z = zeta_p_nonpos(0, Rational(1, 5), 5, 10);
    CHECK(z.bernoulli_part == Rational(3, 10));
    CHECK(agreement(z.value, PadicApprox::from_rational(Rational(3, 2), 5, 10)) >= 10);
    CHECK_THROWS_AS(require_hurwitz_domain(Rational(1, 2), 5), DomainError);
    CHECK_THROWS_AS(require_hurwitz_domain(Rational(1, 2), 2), DomainError);
    CHECK_NOTHROW(require_hurwitz_domain(Rational(1, 4), 2));
  }

  TEST_CASE("positive argument") {
    PadicApprox v = zeta_p(2, Rational(1, 5), 5, 4);
    CHECK(v.precision() == 4);
    CHECK(v.valuation() == 0);
    CHECK(v.unit() % 5 == 1);
    CHECK_THROWS_AS(zeta_p(1, Rational(1, 5), 5, 4), DomainError);
  }

  TEST_CASE("shift relation") {
    for (long i : {-2L, 2L, 3L}) {
      ShiftReport r = zeta_p_shift(i, Rational(1, 5), 5, 12);
      CHECK(r.agreement >= 10);
    }
  }

  TEST_CASE("reduction into (0, 1]") {
    ShiftReduction red = zeta_p_reduce(2, Rational(9, 4), 2, 20);
    CHECK(red.reduced == Rational(1, 4));
    CHECK(red.steps == 2);
    PadicApprox direct = zeta_p(2, Rational(9, 4), 2, 20);
    CHECK(agreement(red.value, direct) >= 18);
  }

  TEST_CASE("Kubota-Leopoldt values") {
    DirichletCharacter triv = DirichletCharacter::trivial();
    // L_5(-1, omega^2) = (1 - 5) (-B_2 / 2) = 1/3
    auto exact = lp_value_exact(-1, triv, 2, 5, 1);
    REQUIRE(exact.has_value());
    CHECK(exact->rational_value() == Rational(1, 3));
    CHECK(lp_interpolation_value(-1, triv, 5).rational_value() == Rational(1, 3));
    // quadratic:-4 at p = 5, i = 0: (1 - chi(5)) (-B_{1,chi}) = 0 * ... with chi(5) = 1
    DirichletCharacter c4 = DirichletCharacter::quadratic(-4);
    CHECK(lp_interpolation_value(0, c4, 5).is_zero());
    // i = -2: (1 - 25) (-B_{3,chi}/3) = -24 * (-1/2) = 12
    CHECK(lp_interpolation_value(-2, c4, 5).rational_value() == 12);
  }

  TEST_CASE("p-adic L-value matches interpolation") {
    DirichletCharacter c3 = DirichletCharacter::quadratic(-3);
    PadicEmbedding e(5, 2);
    long l = minimal_level(c3, 5);
    CHECK(l == 1);
    CHECK(minimal_level(DirichletCharacter::trivial(), 2) == 2);
    PadicApprox v = lp_value(-1, c3, 2, 5, l, e, 15);
    PadicApprox want = cyclo_embed(lp_interpolation_value(-1, c3, 5), e, 15);
    CHECK(agreement(v, want) >= 12);
  }
}
