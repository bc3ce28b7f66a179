#include "padicl/forms.hpp"

#include <doctest.h>

#include <random>

using namespace padicl;

namespace {

FormParameters desk() { return choose_params(DirichletCharacter::trivial(), 2, 16, Rational(1, 2), 1); }

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("desk parameters") {
    FormParameters fp = desk();
    CHECK(fp.Q == 4);
    CHECK(fp.D == 2);
    CHECK(fp.N(1) == 2);
    CHECK(fp.N(3) == 6);
    CHECK(fp.m_of(3) == 2);
    CHECK(fp.sigma(1) == 1);
    CHECK(fp.s_at_least_pQD());  // 16 >= 2 * 4 * 2
    CHECK(fp.p_minus_1_divides_s());
  }

  TEST_CASE("R_1 in closed form") {
    FormParameters fp = desk();
    RnFunction rn = build_rn(fp, 1);
    CHECK(rn.degree == -22);
    // R_1(t) = 64 (2t+1)^4 / (t^14 (t+1)^12)
    for (Rational t : {Rational(1), Rational(3, 7), Rational(-5, 2)}) {
      Rational num = 64, den = 1;
      Rational u = 2 * t + 1;
      for (int k = 0; k < 4; ++k) num *= u;
      for (int k = 0; k < 14; ++k) den *= t;
      for (int k = 0; k < 12; ++k) den *= t + 1;
      CHECK(rn.term(t) == num / den);
    }
  }

  TEST_CASE("partial fractions of 1/(t(t+1))") {
    FactoredTerm f = FactoredTerm::pole(0, 1);
    f *= FactoredTerm::pole(1, 1);
    PartialFractionTable tab = partial_fractions(f);
    CHECK(tab.at(1, 0) == 1);
    CHECK(tab.at(1, 1) == -1);
    CHECK(rho_higher(tab, 1) == 0);
    CHECK(rho_zero(tab, Rational(1, 2)) == 4);
  }

  TEST_CASE("partial fractions reconstruct R_n") {
    FormParameters fp = desk();
    RnFunction rn = build_rn(fp, 2);
    PartialFractionTable tab = partial_fractions(rn.term);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 50);
    int tested = 0;
    while (tested < 20) {
      Rational t = make_rational(Integer(num(rng)), Integer(den(rng)));
      if (t <= 0 && t >= -2 && t.get_den() == 1) continue;
      CHECK(tab(t) == rn.term(t));
      ++tested;
    }
  }

  TEST_CASE("rho_i does not depend on x; rho_0 does") {
    RnFunction rn = build_rn(desk(), 1);
    PartialFractionTable tab = partial_fractions(rn.term);
    // sum over k of i r_{i,k} = 0 for i = 1 because the degree is <= -2.
    CHECK(rho_higher(tab, 1) == 0);
    CHECK(rho_zero(tab, Rational(1, 2)) != rho_zero(tab, Rational(3, 2)));
  }

  TEST_CASE("lambda coefficients are integral") {
    FormParameters fp = desk();
    RnFunction rn = build_rn(fp, 1);
    PartialFractionTable tab = partial_fractions(rn.term);
    LinearFormOverK form = lambda_form(fp, tab, DirichletCharacter::trivial());
    CHECK(form.coeffs.size() == 17);
    for (const auto& c : form.coeffs) CHECK(c.denominator() == 1);
    CHECK(form_scale(3, 4) == 2 * 144);
  }

  TEST_CASE("Hurwitz parameters") {
    FormParameters fp = hurwitz_params(2, Rational(1, 4), 64, Rational(1, 2), 2);
    CHECK(fp.hurwitz);
    CHECK(fp.delta == -2);
    CHECK(fp.r == 0);
    CHECK_THROWS_AS(hurwitz_params(2, Rational(1, 3), 64, Rational(1, 2), 2), DomainError);
    CHECK_THROWS_AS(hurwitz_params(2, Rational(5, 4), 64, Rational(1, 2), 2), DomainError);
  }
}
