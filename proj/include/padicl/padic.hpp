#pragma once

#include "padicl/arith.hpp"

#include <string>

namespace padicl {

/// A p-adic number known modulo p^N, stored as p^valuation * unit.
///
/// Precision is absolute: the value is determined modulo p^precision(). An
/// element whose known digits are all zero is a "zero at precision N"; it has
/// no valuation of its own, only the lower bound N.
class PadicApprox {
 public:
  PadicApprox() = default;

  static PadicApprox zero(unsigned long p, long precision);
  static PadicApprox from_rational(const Rational& x, unsigned long p, long precision);
  /// From p^valuation * unit with the unit known modulo p^relative_precision.
  static PadicApprox from_parts(unsigned long p, long valuation, const Integer& unit,
                                long relative_precision);

  unsigned long prime() const { return p_; }
  long precision() const { return prec_; }
  bool is_zero() const { return zero_; }
  /// kInfiniteValuation for a zero at precision.
  long valuation() const { return zero_ ? kInfiniteValuation : val_; }
  /// Valuation, or the precision for a zero: a certified lower bound in both cases.
  long valuation_bound() const { return zero_ ? prec_ : val_; }
  const Integer& unit() const { return unit_; }
  long relative_precision() const { return zero_ ? 0 : prec_ - val_; }

  /// The representative p^v * unit (unit reduced into [0, p^{N-v})).
  Rational to_rational() const;
  PadicApprox reduced(long precision) const;

  PadicApprox operator-() const;
  PadicApprox& operator+=(const PadicApprox& o);
  PadicApprox& operator-=(const PadicApprox& o);
  PadicApprox& operator*=(const PadicApprox& o);
  PadicApprox& operator/=(const PadicApprox& o);

  /// Exact scaling by a nonzero rational; precision shifts by nu_p(q).
  PadicApprox scaled(const Rational& q) const;
  PadicApprox pow(long k) const;

  std::string to_string() const;

 private:
  void normalize_from(const Integer& value, long base_valuation, long precision);

  unsigned long p_ = 2;
  long prec_ = 0;
  bool zero_ = true;
  long val_ = 0;
  Integer unit_ = 0;
};

PadicApprox operator+(PadicApprox a, const PadicApprox& b);
PadicApprox operator-(PadicApprox a, const PadicApprox& b);
PadicApprox operator*(PadicApprox a, const PadicApprox& b);
PadicApprox operator/(PadicApprox a, const PadicApprox& b);

/// Largest N such that a and b agree modulo p^N (bounded by both precisions).
long agreement(const PadicApprox& a, const PadicApprox& b);

/// True when a and b agree modulo p^N; N must not exceed either precision.
bool congruent(const PadicApprox& a, const PadicApprox& b, long N);

/// q_p: p for odd p, 4 for p = 2.
unsigned long q_p(unsigned long p);
/// phi(q_p): the order of the Teichmuller group.
unsigned long teichmuller_order(unsigned long p);

/// omega(x) for a p-adic unit x, modulo p^N.
PadicApprox teichmuller(const Rational& x, unsigned long p, long N);

/// omega(x) = p^{nu(x)} omega(x / p^{nu(x)}) for nonzero x, with relative precision N.
PadicApprox teichmuller_ext(const Rational& x, unsigned long p, long N);

/// <x> = x / omega(x), a principal unit, with relative precision N.
PadicApprox angle(const Rational& x, unsigned long p, long N);

}  // namespace padicl
