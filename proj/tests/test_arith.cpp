#include "padicl/arith.hpp"

#include <doctest.h>

using namespace padicl;

namespace {

// Kummer oracle: carries when adding n and m - n in base p, digit by digit.
long carries(unsigned long m, unsigned long n, unsigned long p) {
  unsigned long a = n, b = m - n;
  long c = 0, carry = 0;
  while (a || b || carry) {
    unsigned long d = a % p + b % p + static_cast<unsigned long>(carry);
    carry = d >= p ? 1 : 0;
    c += carry;
    a /= p;
    b /= p;
  }
  return c;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("valuations") {
    CHECK(vp(Integer(48), 2) == 4);
    CHECK(vp(Rational(1, 6), 2) == -1);
    CHECK(vp(Rational(9, 2), 3) == 2);
    CHECK(is_infinite(vp(Integer(0), 5)));
    CHECK(vp_factorial(12, 2) == 10);
    CHECK(vp_factorial(100, 5) == 24);
  }

  TEST_CASE("factorials, binomials and lcm") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10UL, 3UL) == 120);
    CHECK(binomial(Integer(7), 2) == 21);
    CHECK(lcm_upto(10) == 2520);
    CHECK(lcm_upto(1) == 1);
    // 12! / (3!^4 0!) = 369600
    CHECK(multinomial_packed(12, 3) == 369600);
    // 6! / 2!^3 = 90
    CHECK(multinomial_packed(6, 2) == 90);
  }

  TEST_CASE("Kummer and Lucas agree with exact binomials") {
    for (unsigned long p : {2UL, 3UL, 5UL})
      for (unsigned long m = 0; m < 60; ++m)
        for (unsigned long n = 0; n <= m; ++n) {
          BinomPadicData d = binom_padic_data(Integer(m), Integer(n), p);
          Integer b = binomial(m, n);
          CHECK(d.carry_count == carries(m, n, p));
          CHECK(d.carry_count == vp(b, p));
          CHECK(Integer(b % p) == d.residue_mod_p);
        }
  }

  TEST_CASE("digits and floor_log") {
    CHECK(digits(Integer(11), 2) == std::vector<unsigned long>{1, 1, 0, 1});
    CHECK(digits(Integer(0), 3).empty());
    CHECK(floor_log(Integer(3), 2) == 1);
    CHECK(floor_log(Integer(8), 2) == 3);
    CHECK(floor_log(Integer(80), 3) == 3);
  }

  TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(make_rational(Integer(10), Integer(-4)) == Rational(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  }

  TEST_CASE("primes and roots of unity") {
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(require_prime(9), DomainError);
    CHECK(euler_phi(12) == 4);
    CHECK(multiplicative_order_mod(2, 5) == 4);
    CHECK(smallest_root_of_unity_mod(4, 5) == 2);
    CHECK(smallest_root_of_unity_mod(2, 5) == 4);
  }
}
