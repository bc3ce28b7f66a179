#include "padicl/lambert.hpp"

#include <doctest.h>

#include <cmath>

using namespace padicl;

TEST_SUITE("lambert") {
  TEST_CASE("log enclosures") {
    // log 2 = 0.693147180559945309417...
    Interval l2 = log_interval(Rational(2));
    CHECK(l2.lo <= Rational(Integer("693147180559945310"), Integer("1000000000000000000")));
    CHECK(l2.hi >= Rational(Integer("693147180559945309"), Integer("1000000000000000000")));
    CHECK(Rational(l2.hi - l2.lo) < Rational(1, 1000000000));
    Interval l1 = log_interval(Rational(1));
    CHECK(l1.lo <= 0);
    CHECK(l1.hi >= 0);
    Interval lh = log_interval(Rational(1, 3));
    CHECK(lh.hi < 0);
  }

  TEST_CASE("interval arithmetic") {
    Interval a{Rational(1), Rational(2)}, b{Rational(-1), Rational(3)};
    Interval p = a * b;
    CHECK(p.lo == -2);
    CHECK(p.hi == 6);
    CHECK_THROWS(a / b);
  }

  TEST_CASE("Lambert W") {
    CHECK(lambert_w(1.0) == doctest::Approx(0.5671432904).epsilon(1e-9));
    CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("certified level") {
    // 2 L log 2 * 4^L <= a: L = 1 needs 5.55, L = 2 needs 44.4.
    CHECK(lambert_level(Rational(100, 12), 2) == 1);
    CHECK(lambert_level(Rational(5), 2) == 0);
    CHECK(lambert_level(Rational(45), 2) == 2);
    CHECK(ell_of_s(100, Rational(1, 2), 2, 1, 0) == 1);
  }

  TEST_CASE("inequality report") {
    LambertReport small = lambert_inequality(100, Rational(1, 2), 2, 1, 0, 1);
    CHECK(small.ell == 1);
    LambertReport big = lambert_inequality(1000000000000L, Rational(1, 2), 2, 1, 0, 1);
    CHECK(big.verdict == Tri::Holds);
    CHECK(std::string(to_string(Tri::Undecided)) == "undecided");
  }
}
