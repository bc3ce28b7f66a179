#include "padicl/bernoulli.hpp"
#include "padicl/polynomial.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and composition") {
    Polynomial t = Polynomial::linear(1, 0);
    Polynomial f = (t + Polynomial::constant(1)).pow(3);
    CHECK(f.coeffs() == std::vector<Rational>{1, 3, 3, 1});
    CHECK(f.compose_linear(2, -1)(Rational(1, 2)) == 1);
    CHECK(f.derivative()(Rational(0)) == 3);
    auto [q, r] = f.divmod(t + Polynomial::constant(1));
    CHECK(q == (t + Polynomial::constant(1)).pow(2));
    CHECK(r.is_zero());
  }

  TEST_CASE("binomial basis") {
    Polynomial b = Polynomial::binomial_basis(3);
    CHECK(b(Rational(5)) == 10);
    CHECK(b(Rational(2)) == 0);
    CHECK(b(Rational(-1)) == -1);
  }

  TEST_CASE("truncated series inverse") {
    Polynomial f(std::vector<Rational>{1, -1});  // 1 - t
    Polynomial g = f.inverse_trunc(6);
    CHECK(g.coeffs() == std::vector<Rational>(6, Rational(1)));
    CHECK(f.mul_trunc(g, 6) == Polynomial::constant(1));
    CHECK_THROWS(Polynomial(std::vector<Rational>{0, 1}).inverse_trunc(3));
  }

  TEST_CASE("Bernoulli numbers against tabulated values") {
    // Tabulated values, B_1 = -1/2 (the Volkenborn convention).
    const Rational expected[] = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0,
                                 Rational(-1, 30), 0, Rational(5, 66)};
    for (unsigned long n = 0; n <= 10; ++n) CHECK(bernoulli_number(n) == expected[n]);
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
  }

  TEST_CASE("Bernoulli polynomials satisfy the difference equation") {
    for (unsigned long n = 1; n <= 12; ++n) {
      Polynomial b = bernoulli_poly(n);
      for (Rational x : {Rational(0), Rational(1, 3), Rational(-7, 2)}) {
        Rational xn1 = 1;
        for (unsigned long k = 0; k + 1 < n; ++k) xn1 *= x;
        CHECK(b(x + 1) - b(x) == Rational(n) * xn1);
      }
    }
  }

  TEST_CASE("Gauss valuation") {
    Polynomial f(std::vector<Rational>{Rational(4), Rational(1, 2), Rational(8)});
    CHECK(f.gauss_valuation(2) == -1);
    CHECK(is_infinite(Polynomial().gauss_valuation(2)));
  }
}
