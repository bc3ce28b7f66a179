#include "padicl/delta.hpp"

#include <doctest.h>

using namespace padicl;

namespace {

// The rule bound must never exceed the truncated wavelet estimate, which is an upper bound on Delta.
void check_sound(const DeltaExpr& e, unsigned long p, long depth) {
  DeltaBound b = delta_rule_bound(e, p);
  long est = delta_truncated(e, p, depth);
  CHECK(b.delta <= est);
}

}  // namespace

TEST_SUITE("delta") {
  TEST_CASE("Delta of t is -1") {
    for (unsigned long p : {2UL, 3UL, 5UL}) CHECK(delta_truncated(DeltaExpr::monomial(1, 1), p, 5) == -1);
  }

  TEST_CASE("monomials and binomials") {
    for (unsigned long p : {2UL, 3UL}) {
      check_sound(DeltaExpr::monomial(Rational(4), 3), p, 6);
      check_sound(DeltaExpr::monomial(Rational(1, 3), 2), p, 6);
      check_sound(DeltaExpr::binomial(4), p, 6);
    }
  }

  TEST_CASE("sums, products and precomposition") {
    DeltaExpr f = DeltaExpr::monomial(1, 2) + DeltaExpr::binomial(3);
    DeltaExpr g = DeltaExpr::monomial(Rational(9), 1);
    for (unsigned long p : {2UL, 3UL}) {
      check_sound(f, p, 6);
      check_sound(f * g, p, 6);
      check_sound(f - g, p, 6);
      check_sound(DeltaExpr::monomial(Rational(8), 2).precompose(1), p, 6);
    }
    CHECK(g(Integer(2), 3) == 18);
    CHECK(DeltaExpr::monomial(1, 2).precompose(2)(Integer(1), 3) == 81);
  }

  TEST_CASE("power difference") {
    DeltaExpr f = DeltaExpr::monomial(1, 1) + DeltaExpr::monomial(Rational(2), 0);
    DeltaExpr g = DeltaExpr::monomial(1, 1);
    DeltaExpr pd = DeltaExpr::power_difference(f, g);
    CHECK(pd.kind() == DeltaExpr::Kind::PowerDifference);
    CHECK(pd(Integer(1), 2) == 9 - 1);
    check_sound(pd, 2, 6);
  }

  TEST_CASE("wavelet expressions are exact") {
    auto f = [](const Integer& t) { return Rational(t * (t + 1)); };
    WaveletExpansion w = wavelet_coeffs(f, 2, 5);
    DeltaExpr e = DeltaExpr::wavelet(w);
    CHECK(delta_rule_bound(e, 2).delta == delta_truncated(e, 2, 5));
  }
}
