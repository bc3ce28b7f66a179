#pragma once

#include "padicl/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padicl {

/// Dirichlet character mod d with values zeta_m^{e(j)} on units and 0 elsewhere.
/// Stored non-primitively; the conductor is detected, not enforced.
class DirichletCharacter {
 public:
  /// exponents[j] for 0 <= j < d: nullopt off the units, otherwise e with chi(j) = zeta_m^e.
  DirichletCharacter(unsigned long modulus, unsigned long order,
                     std::vector<std::optional<long>> exponents);

  static DirichletCharacter trivial(unsigned long modulus = 1);
  /// Kronecker symbol (D/.) of a fundamental discriminant D, modulus |D|.
  static DirichletCharacter quadratic(long discriminant);
  /// "trivial", "trivial:d", "quadratic:D" or a JSON object
  /// {"modulus": d, "order": m, "values": [e or null, ...]}; without "order"
  /// the values are taken in {-1, 0, 1}.
  static DirichletCharacter parse(const std::string& spec);

  unsigned long modulus() const { return d_; }
  /// Order of the value field Q(zeta_m); the character's own order divides it.
  unsigned long order() const { return m_; }
  unsigned long conductor() const { return conductor_; }
  int delta() const { return delta_; }
  bool is_rational() const { return m_ <= 2; }

  std::optional<long> exponent(const Integer& j) const;
  CyclotomicElement value(const Integer& j) const;
  /// chi(j) for rational-valued characters.
  long rational_value(const Integer& j) const;
  /// chi(j) in Q_p through the embedding; zero off the units.
  PadicApprox padic_value(const Integer& j, const PadicEmbedding& e, long N) const;

  std::string to_json() const;

 private:
  unsigned long d_;
  unsigned long m_;
  std::vector<std::optional<long>> exps_;
  unsigned long conductor_ = 1;
  int delta_ = 0;
};

/// B_{k,chi} = d^{k-1} sum_{a=1}^{d} chi(a) B_k(a/d).
CyclotomicElement gen_bernoulli(unsigned long k, const DirichletCharacter& chi);

/// nu_p of an element of Q(zeta_m) through an embedding (integral since unramified).
long cyclo_valuation(const CyclotomicElement& x, const PadicEmbedding& e);

struct ChiPadicData {
  unsigned long d_prime;
  long l0;
  long r;
  int delta;
  CyclotomicElement b_head;  ///< B_{2+delta,chi}
  long b_head_valuation;
};

/// The default embedding is used for irrational characters; it must exist.
ChiPadicData chi_padic_data(const DirichletCharacter& chi, unsigned long p);
ChiPadicData chi_padic_data(const DirichletCharacter& chi, unsigned long p, const PadicEmbedding& e);

/// Embedding of Q(zeta_{order(chi)}) into Q_p by the default root; DomainError when impossible.
PadicEmbedding default_embedding(const DirichletCharacter& chi, unsigned long p);

}  // namespace padicl
