#include "padicl/padic.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("padic") {
  TEST_CASE("construction and normalisation") {
    PadicApprox x = PadicApprox::from_rational(Rational(50), 5, 6);
    CHECK(x.valuation() == 2);
    CHECK(x.unit() == 2);
    CHECK(x.precision() == 6);
    PadicApprox z = PadicApprox::from_rational(Rational(125), 5, 3);
    CHECK(z.is_zero());
    CHECK(z.valuation_bound() == 3);
    PadicApprox h = PadicApprox::from_rational(Rational(1, 2), 5, 4);
    CHECK(h.valuation() == 0);
    // 2 * 313 = 626 = 1 + 625
    CHECK(h.unit() == 313);
  }

  TEST_CASE("field operations round trip") {
    const unsigned long p = 3;
    Rational a(7, 9), b(-5, 4);
    PadicApprox A = PadicApprox::from_rational(a, p, 20), B = PadicApprox::from_rational(b, p, 20);
    CHECK(agreement(A + B, PadicApprox::from_rational(a + b, p, 20)) >= 20);
    CHECK(agreement(A * B, PadicApprox::from_rational(a * b, p, 18)) >= 18);
    CHECK(agreement(A / B, PadicApprox::from_rational(a / b, p, 18)) >= 18);
    CHECK(agreement(A - A, PadicApprox::zero(p, 20)) >= 20);
  }

  TEST_CASE("precision tracks through multiplication by p-powers") {
    PadicApprox x = PadicApprox::from_rational(Rational(1, 3), 3, 5);  // valuation -1
    PadicApprox y = PadicApprox::from_rational(Rational(9), 3, 10);    // valuation 2
    PadicApprox xy = x * y;
    CHECK(xy.valuation() == 1);
    CHECK(xy.precision() <= 7);
  }

  TEST_CASE("Teichmuller characters") {
    // omega(2) mod 25 for p = 5 is 7: 7 = 2 mod 5 and 7^4 = 2401 = 1 mod 25.
    CHECK(teichmuller(Rational(2), 5, 2).unit() == 7);
    PadicApprox w = teichmuller(Rational(3), 7, 10);
    CHECK(agreement(w.pow(6), PadicApprox::from_rational(1, 7, 10)) >= 10);
    CHECK(q_p(2) == 4);
    CHECK(q_p(5) == 5);
    CHECK(teichmuller_order(2) == 2);
    CHECK(teichmuller_order(7) == 6);
    // omega(x) <x> = x
    Rational x(9, 4);
    PadicApprox prod = teichmuller_ext(x, 2, 20) * angle(x, 2, 20);
    CHECK(agreement(prod, PadicApprox::from_rational(x, 2, 18)) >= 18);
  }

  TEST_CASE("congruence predicate") {
    PadicApprox a = PadicApprox::from_rational(Rational(1), 2, 10);
    PadicApprox b = PadicApprox::from_rational(Rational(1 + 64), 2, 10);
    CHECK(congruent(a, b, 6));
    CHECK_FALSE(congruent(a, b, 7));
  }
}
