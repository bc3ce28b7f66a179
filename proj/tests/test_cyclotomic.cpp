#include "padicl/characters.hpp"
#include "padicl/cyclotomic.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(4).coeffs() == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coeffs() == std::vector<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12).coeffs() == std::vector<Rational>{1, 0, -1, 0, 1});
  }

  TEST_CASE("norms and inverses in Q(i)") {
    CyclotomicElement i = CyclotomicElement::root_power(1, 4);
    CyclotomicElement one = CyclotomicElement::from_rational(1, 4);
    CHECK(cyclo_norm(one + i) == 2);
    CHECK(cyclo_norm(CyclotomicElement(4, {Rational(3), Rational(4)})) == 25);
    CHECK(i * i == CyclotomicElement::from_rational(-1, 4));
    CyclotomicElement z(4, {Rational(2), Rational(-1)});
    CHECK(z * z.inverse() == one);
    CHECK(CyclotomicElement::root_power(5, 4) == i);
  }

  TEST_CASE("lifting preserves the value") {
    CyclotomicElement i = CyclotomicElement::root_power(1, 4);
    CyclotomicElement li = i.lifted(8);
    CHECK(li * li == CyclotomicElement::from_rational(-1, 8));
    CHECK(cyclo_norm(li) == 1);
  }

  TEST_CASE("p-adic embedding") {
    PadicEmbedding e(5, 4);
    CHECK(e.residue() == 2);
    PadicApprox zi = cyclo_embed(CyclotomicElement::root_power(1, 4), e, 10);
    CHECK(agreement(zi * zi, PadicApprox::from_rational(-1, 5, 10)) >= 10);
    CHECK(embeddable(4, 5));
    CHECK_FALSE(embeddable(4, 7));
    CHECK(embeddable(2, 2));
  }
}

TEST_SUITE("characters") {
  TEST_CASE("quadratic characters") {
    DirichletCharacter c4 = DirichletCharacter::quadratic(-4);
    CHECK(c4.modulus() == 4);
    CHECK(c4.rational_value(Integer(1)) == 1);
    CHECK(c4.rational_value(Integer(3)) == -1);
    CHECK(c4.rational_value(Integer(2)) == 0);
    CHECK(c4.delta() == 1);
    DirichletCharacter c5 = DirichletCharacter::quadratic(5);
    CHECK(c5.rational_value(Integer(2)) == -1);
    CHECK(c5.rational_value(Integer(4)) == 1);
    CHECK(c5.delta() == 0);
    CHECK(DirichletCharacter::parse("quadratic:-3").rational_value(Integer(2)) == -1);
  }

  TEST_CASE("generalized Bernoulli numbers") {
    // Oracle values from sympy Bernoulli polynomials: f^{k-1} sum chi(a) B_k(a/f).
    DirichletCharacter c4 = DirichletCharacter::quadratic(-4);
    DirichletCharacter c3 = DirichletCharacter::quadratic(-3);
    CHECK(gen_bernoulli(1, c4).rational_value() == Rational(-1, 2));
    CHECK(gen_bernoulli(3, c4).rational_value() == Rational(3, 2));
    CHECK(gen_bernoulli(2, c4).rational_value() == 0);
    CHECK(gen_bernoulli(1, c3).rational_value() == Rational(-1, 3));
    CHECK(gen_bernoulli(3, c3).rational_value() == Rational(2, 3));
    CHECK(gen_bernoulli(2, DirichletCharacter::trivial()).rational_value() == Rational(1, 6));
    // sum over a = 1..d puts B_1(1) = +1/2 here, unlike the Volkenborn B_1 = -1/2.
    CHECK(gen_bernoulli(1, DirichletCharacter::trivial()).rational_value() == Rational(1, 2));
  }

  TEST_CASE("order-4 character over Q(i)") {
    // chi mod 5 with chi(2) = i
    DirichletCharacter chi(5, 4, {std::nullopt, 0, 1, 3, 2});
    CHECK(chi.value(Integer(2)) == CyclotomicElement::root_power(1, 4));
    CHECK(chi.value(Integer(4)) == CyclotomicElement::from_rational(-1, 4));
    CHECK(chi.conductor() == 5);
    CHECK(chi.delta() == 1);
    PadicEmbedding e = default_embedding(chi, 5);
    CHECK(agreement(chi.padic_value(Integer(2), e, 8).pow(4), PadicApprox::from_rational(1, 5, 8)) >= 8);
    DirichletCharacter parsed = DirichletCharacter::parse(R"({"modulus":5,"order":4,"values":[null,0,1,3,2]})");
    CHECK(parsed.value(Integer(3)) == chi.value(Integer(3)));
  }

  TEST_CASE("chi_padic_data on desk characters") {
    ChiPadicData t2 = chi_padic_data(DirichletCharacter::trivial(), 2);
    CHECK(t2.r == 0);
    CHECK(t2.d_prime == 1);
    CHECK(t2.b_head_valuation == -1);
    ChiPadicData c4 = chi_padic_data(DirichletCharacter::quadratic(-4), 2);
    CHECK(c4.l0 == 2);
    CHECK(c4.delta == 1);
    CHECK(c4.r == 0);
    ChiPadicData c3 = chi_padic_data(DirichletCharacter::quadratic(-3), 2);
    CHECK(c3.d_prime == 3);
    CHECK(c3.l0 == 0);
  }

  TEST_CASE("invalid characters") {
    CHECK_THROWS_AS(DirichletCharacter::quadratic(6), DomainError);
    CHECK_THROWS_AS(DirichletCharacter::parse("cubic:7"), DomainError);
    CHECK_THROWS_AS(default_embedding(DirichletCharacter(5, 4, {std::nullopt, 0, 1, 3, 2}), 7), DomainError);
  }
}
