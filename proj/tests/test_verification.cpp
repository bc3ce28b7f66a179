#include "padicl/verification.hpp"

#include <doctest.h>

#include <sstream>

using namespace padicl;

TEST_SUITE("verification") {
  TEST_CASE("dimension bound") {
    CHECK(dimension_bound(1, 1, 0) == Rational(1, 2));
    CHECK(dimension_bound(3, 2, 2) == Rational(2, 3));
    CHECK_THROWS_AS(dimension_bound(0, 1, 0), DomainError);
    CHECK_THROWS_AS(dimension_bound(1, 1, 5), DomainError);
  }

  TEST_CASE("least squares") {
    RateFit f = fit_rate({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK_THROWS(fit_rate({1, 1}, {2, 3}));
  }

  TEST_CASE("binomial congruence on a small instance") {
    // p = 2, l = 1, d' = 1, n = 1: m = 1, and j = 1 gives floor(j/2) = 0, so the indicator is x = 0 mod 2.
    FormParameters fp = choose_params(DirichletCharacter::trivial(), 2, 16, Rational(1, 2), 1);
    CheckReport r = check_chi_congruence(fp, 1, 1, {Integer(0), Integer(1), Integer(2)});
    CHECK(r.pass);
    // binom(N + D x + j, N) with N = 2, D = 2, j = 1: x = 0 -> 1, x = 1 -> binom(5,2) = 10, x = 2 -> binom(7,2) = 21
    CHECK(binomial(3UL, 2UL) % 2 == 1);
    CHECK(binomial(5UL, 2UL) % 2 == 0);
    CHECK(binomial(7UL, 2UL) % 2 == 1);
  }

  TEST_CASE("catalog fixtures are well formed") {
    const auto& cat = catalog();
    REQUIRE(cat.size() == 4);
    CHECK(cat[0].name == "p2_trivial");
    for (const auto& inst : cat) {
      FormParameters fp = inst.params();
      CHECK(fp.p == inst.p);
      CHECK(fp.s == inst.s);
      CHECK(fp.l == inst.l);
    }
    CHECK(cat[3].hurwitz_x.has_value());
  }

  TEST_CASE("growth bound dominates the partial fractions") {
    FormParameters fp = choose_params(DirichletCharacter::trivial(), 2, 16, Rational(1, 2), 1);
    CHECK(growth_bound(fp, 1) > 0);
    CHECK(growth_bound_check(fp, 1, DirichletCharacter::trivial()).pass);
  }

  TEST_CASE("height lemmas over Q hold") {
    CHECK(check_chan_1c(1, 30, 1).pass);
    CHECK(check_chan_2b(2, 30, 1).pass);
    CHECK(check_chan_2c(3, 30, 1).pass);
    CHECK(check_chan_1c(4, 30, 4, true).pass);
  }

  TEST_CASE("interpolation check") {
    CHECK(check_lp_interpolation(DirichletCharacter::trivial(), 5, -1).pass);
    CHECK(check_lp_interpolation(DirichletCharacter::quadratic(-4), 3, -2).pass);
  }
}

TEST_SUITE("report") {
  TEST_CASE("field order and determinism") {
    CheckReport r;
    r.name = "demo";
    r.params = {{"p", 2}};
    r.expected = "1";
    r.observed = "1";
    r.pass = true;
    r.runtime_ms = 12.5;
    Json j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check", "params", "expected", "observed", "verdict"});
    CHECK(j["verdict"] == "pass");
    CHECK(r.to_json(true).contains("runtime_ms"));
    std::ostringstream a, b;
    emit_report(a, {r, r});
    r.runtime_ms = 99;
    emit_report(b, {r, r});
    CHECK(a.str() == b.str());
  }

  TEST_CASE("value encodings") {
    Json q = rational_json(Rational(-3, 4));
    CHECK(q["num"] == "-3");
    CHECK(q["den"] == "4");
    Json z = padic_json(PadicApprox::zero(3, 5));
    CHECK(z["val"] == "inf");
    CHECK(z["prec"] == 5);
    Json c = cyclo_json(CyclotomicElement::root_power(1, 4));
    CHECK(c["m"] == 4);
  }
}
