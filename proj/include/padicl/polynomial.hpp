#pragma once

#include "padicl/arith.hpp"

#include <string>
#include <vector>

namespace padicl {

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
/// Also used as a truncated power series (the *_trunc operations).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// alpha * t + beta
  static Polynomial linear(const Rational& alpha, const Rational& beta);
  /// binom(t, m) = t(t-1)...(t-m+1)/m!
  static Polynomial binomial_basis(unsigned long m);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  Polynomial derivative() const;
  /// p(alpha * t + beta)
  Polynomial compose_linear(const Rational& alpha, const Rational& beta) const;
  Polynomial pow(unsigned long k) const;

  /// Truncations modulo t^n.
  Polynomial truncated(std::size_t n) const;
  Polynomial mul_trunc(const Polynomial& o, std::size_t n) const;
  Polynomial pow_trunc(unsigned long k, std::size_t n) const;
  /// Series inverse modulo t^n; requires a nonzero constant term.
  Polynomial inverse_trunc(std::size_t n) const;

  /// Gauss valuation min_i nu_p(c_i); kInfiniteValuation for zero.
  long gauss_valuation(unsigned long p) const;

  /// Quotient and remainder by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);

}  // namespace padicl
