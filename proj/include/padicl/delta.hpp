#pragma once

#include "padicl/volkenborn.hpp"

#include <memory>

namespace padicl {

/// Expression tree of functions Z_p -> Q_p for bounding Delta(f) = inf_k (nu_p(a_k) - l(k)).
class DeltaExpr {
 public:
  enum class Kind { Monomial, Binomial, Sum, Product, Precompose, PowerDifference, Wavelet };

  /// c * t^n
  static DeltaExpr monomial(const Rational& c, unsigned long n);
  /// binom(t, m)
  static DeltaExpr binomial(unsigned long m);
  /// A finite wavelet expansion; its Delta is computed exactly.
  static DeltaExpr wavelet(WaveletExpansion w);
  /// f^p - g^p where p is the prime passed to the bound.
  static DeltaExpr power_difference(const DeltaExpr& f, const DeltaExpr& g);

  /// f(p^l t)
  DeltaExpr precompose(long l) const;

  Kind kind() const;
  /// Exact value at an integer argument (p is needed by Precompose and PowerDifference).
  Rational operator()(const Integer& t, unsigned long p) const;

  friend DeltaExpr operator+(const DeltaExpr& a, const DeltaExpr& b);
  friend DeltaExpr operator-(const DeltaExpr& a, const DeltaExpr& b);
  friend DeltaExpr operator*(const DeltaExpr& a, const DeltaExpr& b);

  struct Node;

 private:
  explicit DeltaExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend struct DeltaBound delta_rule_bound(const DeltaExpr& e, unsigned long p);
};

struct DeltaBound {
  long delta;        ///< certified lower bound on Delta(f)
  long value_floor;  ///< certified lower bound on nu_p(f(x)) over Z_p
};

/// Compositional lower bound. Throws DomainError when a precomposition side
/// condition nu_p(f(0)) >= bound + l cannot be verified.
DeltaBound delta_rule_bound(const DeltaExpr& e, unsigned long p);

/// min_{k < p^depth} (nu_p(a_k) - l(k)) for the actual wavelet coefficients:
/// an upper estimate of Delta(f), used to test the rule bounds.
long delta_truncated(const DeltaExpr& e, unsigned long p, long depth);

}  // namespace padicl
