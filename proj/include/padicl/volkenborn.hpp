#pragma once

#include "padicl/padic.hpp"
#include "padicl/polynomial.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace padicl {

/// coeff * prod P_i(t)^{e_i} * prod (t + a_j)^{-m_j}
struct FactoredTerm {
  Rational coeff = 1;
  std::vector<std::pair<Polynomial, unsigned long>> factors;
  std::vector<std::pair<Rational, unsigned long>> poles;

  static FactoredTerm constant(const Rational& c);
  static FactoredTerm polynomial(const Polynomial& poly);
  /// (t + a)^{-m}
  static FactoredTerm pole(const Rational& a, unsigned long m);

  long degree() const;
  Rational operator()(const Rational& t) const;
  /// t -> t + x
  FactoredTerm shifted(const Rational& x) const;
  FactoredTerm& operator*=(const FactoredTerm& o);
  /// Expanded numerator (with coeff) and denominator polynomials.
  std::pair<Polynomial, Polynomial> expanded() const;
};

/// A finite sum of factored terms.
struct Integrand {
  std::vector<FactoredTerm> terms;

  Integrand() = default;
  Integrand(FactoredTerm t) { terms.push_back(std::move(t)); }  // NOLINT: implicit by design

  Rational operator()(const Rational& t) const;
  Rational derivative_at(const Rational& t) const;
  Integrand shifted(const Rational& x) const;
  bool has_poles() const;
  /// Sum of the polynomial terms; DomainError if any term has a pole.
  Polynomial as_polynomial() const;
};

Integrand operator+(Integrand a, const Integrand& b);
Integrand operator-(Integrand a, const Integrand& b);
Integrand operator*(const Integrand& a, const Integrand& b);

/// Parses expressions in t such as "(1/5+t)^-1", "3*t^2 - t/2", "binom(t,3)".
/// Negative powers and division are allowed only for linear or constant bases.
Integrand parse_integrand(const std::string& text);

struct VdpData {
  long length;          ///< l(k)
  Integer k_minus;      ///< k with its leading base-p digit removed
};
VdpData vdp_data(const Integer& k, unsigned long p);

/// chi_k(t) = 1 iff t = k mod p^{l(k)}.
bool wavelet_indicator(const Integer& k, const Integer& t, unsigned long p);

struct WaveletExpansion {
  unsigned long p;
  long depth;
  std::vector<Rational> coeffs;  ///< a_k, 0 <= k < p^depth
  Rational operator()(const Integer& t) const;
};

WaveletExpansion wavelet_coeffs(const std::function<Rational(const Integer&)>& f, unsigned long p, long depth);

/// A rational known to agree with the target modulo p^precision (kInfiniteValuation: exact).
struct CertifiedValue {
  Rational value;
  long precision;
};

/// sum_{k < p^M} a_k p^{-l(k)} with the caller's tail bound as precision.
CertifiedValue integral_wavelet(const WaveletExpansion& w, long tail_bound);

/// The level-n partial sum p^{-n} sum_{k < p^n} f(k), exactly.
Rational integral_riemann_exact(const std::function<Rational(const Integer&)>& f, unsigned long p, long n);

/// Level-n partial sum of an integrand with certified distance to the integral.
/// The precision is min(requested N, certified bound).
PadicApprox integral_riemann(const Integrand& f, unsigned long p, long n, long N);

/// Certified nu_p(S_n - integral) for the level-n Riemann sum.
long riemann_error_bound(const Integrand& f, unsigned long p, long n);

struct MahlerStats {
  long terms_used = 0;
  long tail_bound = 0;
};

/// Volkenborn integral through the Mahler expansion with certified tail, to absolute precision N.
/// Poles need nu_p(a) < 0 (nu_2(a) <= -2 for p = 2).
PadicApprox integral_mahler(const Integrand& f, unsigned long p, long N, MahlerStats* stats = nullptr);

/// Exact integral of a polynomial: sum_m (Delta^m f)(0) (-1)^m / (m + 1).
Rational integral_polynomial(const Polynomial& f);

struct TranslationReport {
  PadicApprox shifted_integral;  ///< integral of f(u + m)
  PadicApprox rhs;               ///< integral of f(u) + sum_{i<m} f'(i)
  long agreement;
};
TranslationReport translate_integral(const Integrand& f, unsigned long m, unsigned long p, long N);

/// Cap on the number of Mahler terms; beyond it PrecisionError is thrown.
inline constexpr long kMahlerTermCap = 200000;

}  // namespace padicl
