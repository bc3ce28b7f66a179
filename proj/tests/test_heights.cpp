#include "padicl/heights.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("heights") {
  TEST_CASE("subsets") {
    auto s = subsets(4, 2);
    CHECK(s.size() == 6);
    CHECK(s.front() == std::vector<std::size_t>{0, 1});
    CHECK(s.back() == std::vector<std::size_t>{2, 3});
    CHECK(subsets(3, 0).size() == 1);
  }

  TEST_CASE("determinants") {
    HeightMatrix m = HeightMatrix::from_rationals({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m).rational_value() == 18);
    CyclotomicElement i = CyclotomicElement::root_power(1, 4);
    CyclotomicElement one = CyclotomicElement::from_rational(1, 4);
    HeightMatrix g(4, {{one, i}, {i, one}});
    CHECK(determinant(g) == CyclotomicElement::from_rational(2, 4));
  }

  TEST_CASE("single row: max norm") {
    HeightMatrix r = HeightMatrix::from_rationals({{3, -7, 2}});
    CHECK(height_K(r) == 7);
    PadicEmbedding e(5, 1);
    HeightMatrix r5 = HeightMatrix::from_rationals({{25, 10, 50}});
    CHECK(height_p_valuation(r5, e) == 1);
    std::vector<PadicApprox> xi = {PadicApprox::from_rational(1, 5, 10), PadicApprox::from_rational(2, 5, 10),
                                   PadicApprox::from_rational(0, 5, 10)};
    // L xi = 25 + 20 = 45
    DeltaValuation d = delta_p_valuation(r5, xi, e);
    CHECK(d.exact);
    CHECK(d.valuation == 1);
  }

  TEST_CASE("square matrix: norm of the determinant") {
    CyclotomicElement a(4, {Rational(1), Rational(2)}), b(4, {Rational(0), Rational(1)});
    CyclotomicElement c(4, {Rational(3), Rational(0)}), d(4, {Rational(1), Rational(-1)});
    HeightMatrix m(4, {{a, b}, {c, d}});
    CHECK(height_K(m) == cyclo_norm(determinant(m)));
  }

  TEST_CASE("identity over Q") {
    HeightMatrix id = HeightMatrix::from_rationals({{1, 0}, {0, 1}});
    PadicEmbedding e(5, 1);
    CHECK(height_K(id) == 1);
    CHECK(height_p_valuation(id, e) == 0);
    std::vector<PadicApprox> xi = {PadicApprox::from_rational(50, 5, 10), PadicApprox::from_rational(Rational(1, 5), 5, 10)};
    // Delta_p = max |xi|_p = 5, i.e. valuation -1
    CHECK(delta_p_valuation(id, xi, e).valuation == -1);
  }

  TEST_CASE("shape checks") {
    CHECK_THROWS_AS(HeightMatrix::from_rationals({{1}, {2}}), DomainError);
    CHECK_THROWS_AS(HeightMatrix::from_rationals({{1, 2}, {3}}), DomainError);
    HeightMatrix m = HeightMatrix::from_rationals({{1, 2, 3}});
    CHECK(m.with_row(HeightMatrix::from_rationals({{4, 5, 6}})).rows() == 2);
    CHECK(m.columns({0, 2}).cols() == 2);
  }
}
