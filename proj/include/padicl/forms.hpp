#pragma once

#include "padicl/characters.hpp"
#include "padicl/volkenborn.hpp"

#include <optional>
#include <vector>

namespace padicl {

struct FormParameters {
  unsigned long p = 2;
  long s = 0;
  int delta = 0;  ///< 0 or 1 from the parity of chi; -2 for the Hurwitz variant
  long r = 0;
  long l = 0;
  long l0 = 0;
  unsigned long d_prime = 1;
  Integer Q;  ///< p^{r+l+1}
  Integer D;  ///< d' p^l
  Rational epsilon = Rational(1, 2);
  long ell = 0;  ///< Lambert rule output; l may differ when given explicitly
  bool hurwitz = false;

  /// N(n) = p^l (p^{floor(log_p(d' n)) + 1} - 1)
  Integer N(long n) const;
  /// sigma(n) = p^{l+r} n - 1
  Integer sigma(long n) const;
  /// floor(log_p(n d')) + 1
  long m_of(long n) const;

  bool s_at_least_pQD() const;
  bool p_minus_1_divides_s() const;
  /// p^{l+r} | n + 1
  bool stride_ok(long n) const;
};

/// Parameters of the L-value forms. Without an explicit l, l = max(ell(s), minimal admissible level).
FormParameters choose_params(const DirichletCharacter& chi, unsigned long p, long s, const Rational& epsilon,
                             std::optional<long> l = std::nullopt);
FormParameters choose_params(const DirichletCharacter& chi, unsigned long p, long s, const Rational& epsilon,
                             const PadicEmbedding& e, std::optional<long> l = std::nullopt);

/// Hurwitz variant for x = j0/d in (0, 1] with |x|_p > 1: delta = -2, r = 0, d' from d.
FormParameters hurwitz_params(unsigned long p, const Rational& x, long s, const Rational& epsilon,
                              std::optional<long> l = std::nullopt);

/// R_n(t) = n!^s mult(N;n)^Q binom(Dt+N, N)^Q (Dt)^{2+delta} / (t)_{n+1}^s in factored form.
struct RnFunction {
  long n = 0;
  long s = 0;
  Integer N;
  FactoredTerm term;
  long degree = 0;
};
RnFunction build_rn(const FormParameters& fp, long n);

/// r_{i,k} for f = sum_{k=0}^{n} sum_{i=1}^{s} r_{i,k} / (t+k)^i.
struct PartialFractionTable {
  long n = 0;
  long s = 0;
  std::vector<std::vector<Rational>> r;  ///< r[k][i-1]

  const Rational& at(long i, long k) const { return r[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)]; }
  Rational operator()(const Rational& t) const;
};

/// Per pole, the Laurent tail comes from a truncated series of f(t)(t+k)^s at t = -k.
/// Needs poles exactly at 0, -1, ..., -n, all of order s, and degree <= -1.
PartialFractionTable partial_fractions(const FactoredTerm& f);

/// rho_i = sum_k i r_{i,k}
Rational rho_higher(const PartialFractionTable& t, long i);
/// rho_{0,x} = -sum_i sum_k sum_{nu<k} i r_{i,k} (nu + x)^{-i-1}
Rational rho_zero(const PartialFractionTable& t, const Rational& x);

struct LinearFormOverK {
  long n = 0;
  FormParameters params;
  std::vector<CyclotomicElement> coeffs;  ///< lambda_0 .. lambda_s
};

/// (s-1)! d_n^{s-1}: the common scale of every coefficient.
Integer form_scale(long s, long n);

/// lambda_0 = c sum_j chi(j) rho_{0,j/D}, lambda_i = c D^{i+1} rho_i with c = form_scale.
/// InvariantError if any coefficient is not integral.
LinearFormOverK lambda_form(const FormParameters& fp, const PartialFractionTable& t, const DirichletCharacter& chi);

struct IdentityReport {
  PadicApprox lhs;
  PadicApprox rhs;
  long agreement = 0;
  long lhs_valuation = 0;  ///< kInfiniteValuation when zero at precision
  long precision = 0;
};

/// c sum_j chi(j) int R_n(t + j/D) dt against Lambda_n(1, L_p(2, chi omega^{-1}), ..., L_p(s+1, chi omega^{-s})).
/// `precision` is absolute; pick it above the expected valuation.
IdentityReport evaluate_form_identity(const FormParameters& fp, long n, const DirichletCharacter& chi,
                                      const PadicEmbedding& e, long precision);

/// int R_n(t + x) dt against rho_{0,x} + sum_i rho_i omega(x)^{-i} zeta_p(i+1, x).
IdentityReport per_x_identity(const FormParameters& fp, long n, const Rational& x, long precision);

/// sum_{j chi(j)} int R_n(t + j/D) dt with chi embedded into Q_p, absolute precision N.
PadicApprox character_integral_sum(const FormParameters& fp, const RnFunction& rn, const DirichletCharacter& chi,
                                   const PadicEmbedding& e, long N);

struct HurwitzForm {
  LinearFormOverK form;   ///< coefficients in Q(zeta_{phi(q_p)}) carrying omega(j0)^{-i}
  Rational x;             ///< j0 / d
  long j0 = 0;
  Integer d;
  IdentityReport identity;
};

/// tilde-Lambda_n for x in (0, 1] with |x|_p >= q_p, plus its identity against zeta_p(i+1, x).
HurwitzForm hurwitz_variant_form(const FormParameters& fp, const Rational& x, long n, long precision);

}  // namespace padicl
