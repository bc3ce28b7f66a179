// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "padicl/bernoulli.hpp"
#include "padicl/verification.hpp"
#include "padicl/zeta.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace padicl;

namespace {

struct Outcome {
  bool pass = true;
  std::string failure;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      failure = what;
      pass = false;
    }
  }
  std::string summary() const { return pass ? note.str() : "first failure: " + failure + " | " + note.str(); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// B_0..B_10 from standard tables (B_1 = -1/2).
const Rational kBernoulli[] = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0,
                               Rational(-1, 30), 0, Rational(5, 66)};

// B_n(x) = sum_k binom(n, k) B_k x^{n-k}, from the table above rather than the library.
Rational bernoulli_poly_oracle(unsigned long n, const Rational& x) {
  Rational s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational xp = 1;
    for (unsigned long e = 0; e < n - k; ++e) xp *= x;
    s += Rational(binomial(n, k)) * kBernoulli[k] * xp;
  }
  return s;
}

void criterion1(Outcome& o) {
  struct Case {
    Rational x;
    unsigned long p;
  };
  for (const Case& c : {Case{Rational(1, 5), 5}, Case{Rational(2, 25), 5}, Case{Rational(1, 4), 2}}) {
    auto t0 = Clock::now();
    Integrand f(FactoredTerm::pole(c.x, 1));
    PadicApprox riem = integral_riemann(f, c.p, 8, 60);
    PadicApprox mahl = integral_mahler(f, c.p, riem.precision());
    long weaker = std::min(riem.precision(), mahl.precision());
    double secs = seconds_since(t0);
    o.require(weaker > 0, "no certified digits for x=" + to_string(c.x));
    o.require(agreement(riem, mahl) >= weaker, "engines disagree for x=" + to_string(c.x));
    o.require(secs < 1.0, "slow for x=" + to_string(c.x));
    o.note << "x=" << to_string(c.x) << " p=" << c.p << " digits=" << weaker << "; ";
  }
}

void criterion2(Outcome& o) {
  auto t0 = Clock::now();
  for (Rational x : {Rational(1, 5), Rational(3, 4), Rational(7)})
    for (unsigned long n = 0; n <= 10; ++n) {
      Polynomial f = Polynomial::linear(1, x).pow(n);
      o.require(integral_polynomial(f) == bernoulli_poly_oracle(n, x),
                "n=" + std::to_string(n) + " x=" + to_string(x));
    }
  o.require(seconds_since(t0) < 1.0, "slow");
  o.note << "n <= 10 at 3 points";
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<long> numd(-20, 20), coeffd(1, 9), powd(1, 3), mdist(1, 5), poled(1, 2);
  long worst = LONG_MAX;
  for (int trial = 0; trial < 50; ++trial) {
    unsigned long p = trial % 2 ? 5 : 3;
    FactoredTerm term = FactoredTerm::constant(make_rational(Integer(coeffd(rng)), Integer(coeffd(rng))));
    long poles = poled(rng), deg = 0;
    for (long k = 0; k < poles; ++k) {
      long num;
      do num = numd(rng);
      while (num % static_cast<long>(p) == 0);
      long e = std::uniform_int_distribution<long>(1, 2)(rng);
      Integer den = pow_p(p, static_cast<unsigned long>(e));
      unsigned long mult = static_cast<unsigned long>(powd(rng));
      term *= FactoredTerm::pole(make_rational(Integer(num), den), mult);
      deg -= static_cast<long>(mult);
    }
    if (deg > -2) term *= FactoredTerm::pole(make_rational(Integer(1), Integer(p)), static_cast<unsigned long>(deg + 2));
    o.require(term.degree() <= -2, "degree");
    unsigned long m = static_cast<unsigned long>(mdist(rng));
    const long N = 20;
    TranslationReport rep = translate_integral(Integrand(term), m, p, N);
    long target = std::min(rep.shifted_integral.precision(), rep.rhs.precision());
    o.require(target >= 10, "too little certified precision at trial " + std::to_string(trial));
    o.require(rep.agreement >= target, "mismatch at trial " + std::to_string(trial));
    worst = std::min(worst, rep.agreement);
  }
  o.note << "50 functions, min agreement " << worst;
}

void criterion4(Outcome& o) {
  const std::pair<const char*, unsigned long> cases[] = {{"trivial", 2},      {"trivial", 3},      {"trivial", 5},
                                                         {"quadratic:-3", 2}, {"quadratic:-3", 5}, {"quadratic:-4", 3},
                                                         {"quadratic:-4", 5}};
  int n = 0;
  for (const auto& [spec, p] : cases)
    for (long i : {-1L, -2L, -3L}) {
      CheckReport r = check_lp_interpolation(DirichletCharacter::parse(spec), p, i);
      o.require(r.pass, std::string(spec) + " p=" + std::to_string(p) + " i=" + std::to_string(i));
      ++n;
    }
  // L_5(-1, omega^2) = (1 - 5)(-zeta(-1)) with zeta(-1) = -1/12
  auto v = lp_value_exact(-1, DirichletCharacter::trivial(), 2, 5, 1);
  o.require(v && v->is_rational() && v->rational_value() == Rational(1, 3), "L_5(-1, omega^2) != 1/3");
  PadicApprox padic = lp_value(-1, DirichletCharacter::trivial(), 2, 5, 1, PadicEmbedding(5, 1), 30);
  o.require(agreement(padic, PadicApprox::from_rational(Rational(1, 3), 5, 30)) >= 30, "p-adic L_5(-1) != 1/3");
  o.note << n << " cases plus L_5(-1, w^2) = 1/3";
}

void criterion5(Outcome& o) {
  auto t0 = Clock::now();
  const CatalogInstance& inst = catalog().front();
  std::vector<Integer> xs;
  for (long x = 0; x < 64; ++x) xs.emplace_back(x);
  for (long j : {1L, 3L, 5L}) o.require(check_chi_congruence(inst.params(), inst.n, j, xs).pass, "j=" + std::to_string(j));
  double secs = seconds_since(t0);
  o.require(secs < 10.0, "slow");
  o.note << inst.name << ", 192 residues";
}

// Oracle valuations s nu(n!) + Q nu(mult) + ((n+1)s+1) l - m + nu(B), evaluated by hand:
//   p2_trivial: Q=8, N=12, mult=12!/3!^4=369600 (nu 6), m=2, nu(1/6)=-1: 64 + 48 + 514 - 2 - 1 = 623
//   p3_trivial: Q=9, N=6, mult=6!/2!^3=90 (nu 2), m=1, nu(1/6)=-1: 0 + 18 + 247 - 1 - 1 = 263
//   p2_chi4: as p2_trivial with nu(B_{3,chi}) = nu(3/2) = -1, so 623.
const long kOracleValuation[] = {623, 263, 623};

void criterion6(Outcome& o) {
  auto t0 = Clock::now();
  for (std::size_t k = 0; k < 3; ++k) {
    const CatalogInstance& inst = catalog()[k];
    FormParameters fp = inst.params();
    DirichletCharacter chi = inst.chi();
    PadicEmbedding e = default_embedding(chi, inst.p);
    for (long j = 1; j < fp.D.get_si(); ++j)
      if (j % static_cast<long>(inst.p) != 0)
        o.require(check_fj_integral(fp, inst.n, j).pass, inst.name + " f_j j=" + std::to_string(j));
    CheckReport r = check_valuation_formula(fp, inst.n, chi, e);
    o.require(r.pass, inst.name + " valuation " + r.observed + " vs " + r.expected);
    o.require(r.expected == std::to_string(kOracleValuation[k]), inst.name + " prediction " + r.expected);
    o.note << inst.name << " nu=" << r.observed << "; ";
  }
  o.require(seconds_since(t0) < 600.0, "slow");
}

void criterion7(Outcome& o) {
  auto t0 = Clock::now();
  for (const auto& inst : catalog()) {
    FormParameters fp = inst.params();
    CheckReport r = inst.hurwitz_x ? check_hurwitz_identity(fp, *inst.hurwitz_x, inst.n)
                                   : check_form_identity(fp, inst.n, inst.chi(), default_embedding(inst.chi(), inst.p));
    o.require(r.pass, inst.name + ": " + r.observed);
    o.note << inst.name << " " << r.observed << "; ";
  }
  o.require(seconds_since(t0) < 900.0, "slow");
}

void criterion8(Outcome& o) {
  for (std::size_t k = 0; k < 3; ++k) {
    const CatalogInstance& inst = catalog()[k];
    o.require(check_integrality(inst.params(), inst.n, inst.chi()).pass, inst.name);
  }
  CheckReport r = check_integrality_random(20240611, 50);
  o.require(r.pass, "random: " + r.observed);
  o.note << "catalog + 50 random configurations";
}

void criterion9(Outcome& o) {
  for (std::size_t k = 0; k < 3; ++k) {
    const CatalogInstance& inst = catalog()[k];
    CheckReport r = growth_bound_check(inst.params(), inst.n, inst.chi());
    o.require(r.pass, inst.name + ": " + r.observed);
  }
  o.note << "3 catalog instances";
}

void criterion10(Outcome& o, std::vector<std::string>& extra) {
  for (unsigned long m : {1UL, 4UL}) {
    const std::string field = m == 1 ? "Q" : "Q(i)";
    CheckReport c1 = check_chan_1c(7 + m, 200, m);
    CheckReport c2b = check_chan_2b(11 + m, 200, m);
    CheckReport c2c = check_chan_2c(13 + m, 200, m);
    o.require(c1.pass, "chan_1c over " + field + ": " + c1.observed);
    o.require(c2b.pass, "chan_2b over " + field + ": " + c2b.observed);
    o.require(c2c.pass, "chan_2c over " + field + ": " + c2c.observed);
    if (!c1.pass && m == 4)
      extra.push_back(
          "  note: the factor s+2 in the sum-height lemma is too small over fields of degree > 1; "
          "counterexample M=(-3+5i, 2+9i), L=(-6-i, 3-4i) gives N(det)=7085 > 2*85*37=6290");
  }
  CheckReport corrected = check_chan_1c(11, 200, 4, true);
  extra.push_back(std::string("  info: sum-height lemma with factor (s+2)^[K:Q] over Q(i): ") +
                  (corrected.pass ? "holds" : "fails") + " on 200 matrices");
  o.require(dimension_bound(1, 1, 0) == Rational(1, 2), "dimension_bound(1,1,0)");
  o.require(dimension_bound(Rational(5, 2), Rational(3, 7), Rational(1, 7)) ==
                Rational(3, 7) / (Rational(5, 2) + Rational(2, 7)),
            "dimension_bound exact rational");
  const CatalogInstance& p2 = catalog().front();
  CheckReport fit = check_rate_fit(p2.params(), p2.chi(), PadicEmbedding(2, 1), {3, 7, 11});
  o.require(fit.pass, "rate fit: " + fit.observed + " vs " + fit.expected);
  o.note << "chan_1c/2b/2c on 200 matrices each over Q and Q(i); rate fit: " << fit.observed;
}

}  // namespace

int main() {
  std::vector<std::string> extra;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"engine agreement", criterion1},
      {"exact polynomial integrals", criterion2},
      {"translation formula", criterion3},
      {"interpolation identity", criterion4},
      {"binomial congruence", criterion5},
      {"integral congruence and valuation", criterion6},
      {"linear-form identities", criterion7},
      {"integrality", criterion8},
      {"growth bound", criterion9},
      {"height lemmas, dimension bound, rate fit", [&extra](Outcome& o) { criterion10(o, extra); }},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    double secs = seconds_since(t0);
    std::printf("%s criterion %zu (%s) [%.2fs]: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                secs, o.summary().c_str());
    if (k + 1 == criteria.size())
      for (const auto& line : extra) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
