#include "padicl/polynomial.hpp"

#include <algorithm>

namespace padicl {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& alpha, const Rational& beta) {
  return Polynomial({beta, alpha});
}

Polynomial Polynomial::binomial_basis(unsigned long m) {
  Polynomial r = constant(1);
  for (unsigned long i = 0; i < m; ++i) r *= linear(1, -Rational(i));
  r *= Rational(1, factorial(m));
  return r;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<unsigned long>(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::compose_linear(const Rational& alpha, const Rational& beta) const {
  Polynomial lin = linear(alpha, beta);
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = constant(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::truncated(std::size_t n) const {
  Polynomial r = *this;
  if (r.c_.size() > n) r.c_.resize(n);
  r.trim();
  return r;
}

Polynomial Polynomial::mul_trunc(const Polynomial& o, std::size_t n) const {
  std::vector<Rational> r(std::min(n, c_.size() + o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size() && i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow_trunc(unsigned long k, std::size_t n) const {
  Polynomial result = constant(1).truncated(n), base = truncated(n);
  while (k > 0) {
    if (k & 1) result = result.mul_trunc(base, n);
    k >>= 1;
    if (k) base = base.mul_trunc(base, n);
  }
  return result;
}

Polynomial Polynomial::inverse_trunc(std::size_t n) const {
  if (c_.empty() || c_[0] == 0) throw DomainError("inverse_trunc: constant term vanishes");
  std::vector<Rational> r(n, 0);
  Rational inv0 = 1 / c_[0];
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = (k == 0) ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < c_.size(); ++j) acc -= c_[j] * r[k - j];
    r[k] = acc * inv0;
  }
  return Polynomial(std::move(r));
}

long Polynomial::gauss_valuation(unsigned long p) const {
  long v = kInfiniteValuation;
  for (const auto& x : c_)
    if (x != 0) v = std::min(v, vp(x, p));
  return v;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("divmod: zero divisor");
  Polynomial q, r = *this;
  if (r.degree() < d.degree()) return {q, r};
  std::vector<Rational> qc(static_cast<std::size_t>(r.degree() - d.degree() + 1), 0);
  Rational lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    Rational f = r.leading() / lead;
    qc[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  return {Polynomial(std::move(qc)), r};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + padicl::to_string(c_[i]) + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

}  // namespace padicl
