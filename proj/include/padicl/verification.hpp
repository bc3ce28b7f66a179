#pragma once

#include "padicl/forms.hpp"
#include "padicl/heights.hpp"
#include "padicl/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padicl {

/// A fixture of the desk catalog. Hurwitz instances carry x and use the trivial character.
struct CatalogInstance {
  std::string name;
  std::string character;  ///< spec accepted by DirichletCharacter::parse
  unsigned long p;
  long s;
  long l;
  long n;
  std::optional<Rational> hurwitz_x;

  DirichletCharacter chi() const { return DirichletCharacter::parse(character); }
  FormParameters params() const;
};

/// Form parameters and n as a JSON object (big integers as strings).
Json form_params_json(const FormParameters& fp, long n);

/// The four fixtures: p=2 trivial, p=3 trivial, p=2 mod 4, Hurwitz x=1/4.
const std::vector<CatalogInstance>& catalog();

/// binom(N + D x + j, N) mod p against the indicator of x = -(d')^{-1} floor(j/p^l) mod p^m.
CheckReport check_chi_congruence(const FormParameters& fp, long n, long j, const std::vector<Integer>& xs);

/// int f_j = j^{2+delta} p^{-m} mod p^{-m+l+r}, with f_j built directly from its definition.
CheckReport check_fj_integral(const FormParameters& fp, long n, long j);

/// Predicted nu_p(sum_j chi(j) int R_n(t + j/D)) from its exact ingredients.
long predicted_integral_valuation(const FormParameters& fp, long n, const DirichletCharacter& chi,
                                  const PadicEmbedding& e);

/// Exact integer equality of the observed and predicted valuation; precision is raised until
/// the sum is nonzero, a bounded number of times.
CheckReport check_valuation_formula(const FormParameters& fp, long n, const DirichletCharacter& chi,
                                    const PadicEmbedding& e);

/// Passes when the two sides agree to at least nu_p(lhs) + relative_digits.
CheckReport check_form_identity(const FormParameters& fp, long n, const DirichletCharacter& chi,
                                const PadicEmbedding& e, long relative_digits = 20);
CheckReport check_hurwitz_identity(const FormParameters& fp, const Rational& x, long n, long relative_digits = 20);

/// Scaled rho values and the lambda coefficients are integers.
CheckReport check_integrality(const FormParameters& fp, long n, const DirichletCharacter& chi);
/// The same over `count` random small configurations drawn from `seed`.
CheckReport check_integrality_random(std::uint64_t seed, int count);

/// (pD)^{pDQn} 2^{sn} (1+pDn)^Q D^{3s+3} n^3
Integer growth_bound(const FormParameters& fp, long n);
/// |r_{i,k}| <= growth_bound for every entry, plus rate reports.
CheckReport growth_bound_check(const FormParameters& fp, long n, const DirichletCharacter& chi);

/// tau1 / (tau + tau1 - tau2); needs tau, tau1 > 0, tau2 >= 0 and a positive denominator.
Rational dimension_bound(const Rational& tau, const Rational& tau1, const Rational& tau2);

struct RateFit {
  double slope = 0;
  double intercept = 0;
};
/// Ordinary least squares y = slope x + intercept; needs two distinct x values.
RateFit fit_rate(const std::vector<double>& xs, const std::vector<double>& ys);

/// Fits tau_p from nu_p(Lambda_n(1, theta)) log p and tau from log H_K(Lambda_n) over the given n.
CheckReport check_rate_fit(const FormParameters& fp, const DirichletCharacter& chi, const PadicEmbedding& e,
                           const std::vector<long>& ns, double tolerance = 0.15);

/// H_K(M + L) <= factor H_K(M) H_K(L) on random integer matrices over Q(zeta_m), m in {1, 4}.
/// With corrected = false the factor is s+2 as stated; otherwise (s+2)^{[K:Q]}.
CheckReport check_chan_1c(std::uint64_t seed, int count, unsigned long m, bool corrected = false);
/// Delta_p(M) != 0 implies H_p(M) >= 1/H_K(M), p = 5.
CheckReport check_chan_2b(std::uint64_t seed, int count, unsigned long m);
/// Delta_p(M + L) = H_p(M) Delta_p(L) whenever H_p(M) Delta_p(L) > H_p(L) Delta_p(M), p = 5.
CheckReport check_chan_2c(std::uint64_t seed, int count, unsigned long m);

/// Lambert inequality over sampled s; passes when it certifiably holds at the largest one.
CheckReport check_lambert(const std::vector<long>& s_values, const Rational& epsilon, unsigned long p);

/// L_p(i, chi omega^{1-i}) against (1 - chi(p) p^{-i}) (-B_{1-i,chi}/(1-i)) for i <= 0,
/// both p-adically and, when available, exactly.
CheckReport check_lp_interpolation(const DirichletCharacter& chi, unsigned long p, long i, long precision = 30);

/// Fixture checks in a fixed order: the desk instances, random integrality and the rate fit.
std::vector<CheckReport> run_catalog();
/// Random-matrix height lemmas over Q and Q(i), the stated and the corrected factor.
std::vector<CheckReport> run_height_lemmas();
/// Catalog, height lemmas, interpolation samples and the Lambert report.
std::vector<CheckReport> run_all();

}  // namespace padicl
