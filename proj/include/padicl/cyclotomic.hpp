#pragma once

#include "padicl/padic.hpp"
#include "padicl/polynomial.hpp"

#include <string>
#include <vector>

namespace padicl {

/// Phi_m, memoized.
const Polynomial& cyclotomic_polynomial(unsigned long m);

/// Res(a, b) over Q.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(unsigned long m);
  CyclotomicElement(unsigned long m, std::vector<Rational> coords);

  static CyclotomicElement from_rational(const Rational& q, unsigned long m);
  /// zeta_m^k for any integer k.
  static CyclotomicElement root_power(long k, unsigned long m);

  unsigned long order() const { return m_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  /// Common denominator of the coordinates (1 for algebraic integers in Z[zeta]).
  Integer denominator() const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const Rational& q);
  CyclotomicElement operator-() const;
  CyclotomicElement inverse() const;
  CyclotomicElement pow(long k) const;

  /// The same number viewed in Q(zeta_n); requires m | n.
  CyclotomicElement lifted(unsigned long n) const;

  /// Absolute norm to Q, computed as Res(Phi_m, a).
  Rational norm() const;

  bool operator==(const CyclotomicElement& o) const;
  std::string to_string() const;

 private:
  Polynomial as_polynomial() const;
  static CyclotomicElement from_polynomial(const Polynomial& poly, unsigned long m);
  unsigned long m_;
  std::vector<Rational> coords_;
};

CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b);
CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b);
CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b);
CyclotomicElement operator*(CyclotomicElement a, const Rational& q);

Rational cyclo_norm(const CyclotomicElement& x);

/// Q(zeta_m) -> Q_p sending zeta_m to the Teichmuller lift of a residue of
/// exact order m mod p. Needs m | p-1 (m | 2 for p = 2).
class PadicEmbedding {
 public:
  /// Default: lift of the smallest positive residue of order m.
  PadicEmbedding(unsigned long p, unsigned long m);
  /// Explicit residue of order m mod p.
  PadicEmbedding(unsigned long p, unsigned long m, unsigned long residue);

  unsigned long prime() const { return p_; }
  unsigned long order() const { return m_; }
  unsigned long residue() const { return residue_; }
  PadicApprox root_image(long N) const;

 private:
  unsigned long p_;
  unsigned long m_;
  unsigned long residue_;
};

/// Image of x at absolute precision N (the order of x must divide the embedding order).
PadicApprox cyclo_embed(const CyclotomicElement& x, const PadicEmbedding& e, long N);

/// True when Q(zeta_m) embeds into Q_p via Teichmuller roots.
bool embeddable(unsigned long m, unsigned long p);

}  // namespace padicl
