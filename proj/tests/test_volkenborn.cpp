#include "padicl/bernoulli.hpp"
#include "padicl/volkenborn.hpp"

#include <doctest.h>

using namespace padicl;

TEST_SUITE("volkenborn") {
  TEST_CASE("polynomial integrals are Bernoulli numbers") {
    Polynomial t = Polynomial::linear(1, 0);
    for (unsigned long n = 0; n <= 10; ++n) CHECK(integral_polynomial(t.pow(n)) == bernoulli_number(n));
    // int binom(t, m) = (-1)^m / (m + 1)
    for (unsigned long m = 0; m <= 8; ++m)
      CHECK(integral_polynomial(Polynomial::binomial_basis(m)) == Rational(m % 2 ? -1 : 1, m + 1));
  }

  TEST_CASE("translation invariance of polynomial integrals") {
    Polynomial f(std::vector<Rational>{Rational(3), Rational(-1, 2), Rational(0), Rational(5)});
    Rational x(7, 3);
    // int (x + t)^n = B_n(x) extends linearly; check against the Bernoulli polynomial expansion.
    Rational expected = 0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
      expected += f.coeffs()[k] * bernoulli_poly(k)(x);
    CHECK(integral_polynomial(f.compose_linear(1, x)) == expected);
  }

  TEST_CASE("expression parser") {
    Integrand f = parse_integrand("3*t^2 - t/2 + binom(t,3)");
    CHECK_FALSE(f.has_poles());
    CHECK(f(Rational(4)) == 3 * 16 - 2 + 4);
    Integrand g = parse_integrand("(1/5+t)^-1");
    CHECK(g.has_poles());
    CHECK(g(Rational(0)) == 5);
    CHECK(g.derivative_at(Rational(0)) == -25);
    CHECK_THROWS_AS(parse_integrand("(t^2+1)^-1"), DomainError);
    CHECK_THROWS_AS(parse_integrand("t +"), DomainError);
  }

  TEST_CASE("van der Put data and wavelets") {
    VdpData d = vdp_data(Integer(11), 2);  // 1011_2
    CHECK(d.length == 4);
    CHECK(d.k_minus == 3);
    CHECK(vdp_data(Integer(0), 3).length == 0);
    CHECK(wavelet_indicator(Integer(11), Integer(27), 2));
    CHECK_FALSE(wavelet_indicator(Integer(11), Integer(19), 2));
    auto sq = [](const Integer& t) { return Rational(t * t); };
    WaveletExpansion w = wavelet_coeffs(sq, 3, 4);
    for (long k = 0; k < 81; ++k) CHECK(w(Integer(k)) == k * k);
  }

  TEST_CASE("Riemann sums converge to the polynomial integral") {
    auto cube = [](const Integer& t) { return Rational(t * t * t); };
    Rational exact = bernoulli_number(3);
    for (long n = 1; n <= 6; ++n) {
      Rational s = integral_riemann_exact(cube, 3, n);
      CHECK(vp(Rational(s - exact), 3) >= n - 1);
    }
  }

  TEST_CASE("Mahler and Riemann agree on a pole") {
    Integrand f = parse_integrand("(1/5+t)^-1");
    MahlerStats st;
    PadicApprox m = integral_mahler(f, 5, 12, &st);
    CHECK(st.terms_used > 0);
    PadicApprox r = integral_riemann(f, 5, 8, 12);
    CHECK(r.precision() > 0);
    CHECK(agreement(m, r) >= r.precision());
    CHECK_THROWS_AS(integral_mahler(parse_integrand("(1/2+t)^-1"), 2, 10), DomainError);
  }

  TEST_CASE("translation formula") {
    Integrand f = parse_integrand("(1/5+t)^-2 + t^3");
    TranslationReport rep = translate_integral(f, 3, 5, 12);
    CHECK(rep.agreement >= 10);
  }
}
