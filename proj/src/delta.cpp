#include "padicl/delta.hpp"

#include <algorithm>

namespace padicl {

struct DeltaExpr::Node {
  Kind kind = Kind::Monomial;
  Rational c = 0;
  unsigned long n = 0;  // monomial degree or binomial order
  long l = 0;           // precomposition exponent
  std::shared_ptr<const Node> a, b;
  std::shared_ptr<const WaveletExpansion> w;
};

namespace {

long sat_add(long x, long y) {
  if (is_infinite(x) || is_infinite(y)) return kInfiniteValuation;
  return x + y;
}

using NodePtr = std::shared_ptr<const DeltaExpr::Node>;

NodePtr make(DeltaExpr::Node n) { return std::make_shared<const DeltaExpr::Node>(std::move(n)); }

Rational eval(const DeltaExpr::Node& n, const Integer& t, unsigned long p) {
  using K = DeltaExpr::Kind;
  switch (n.kind) {
    case K::Monomial: {
      Integer tn;
      mpz_pow_ui(tn.get_mpz_t(), t.get_mpz_t(), n.n);
      return n.c * Rational(tn);
    }
    case K::Binomial: {
      Rational r = 1;
      for (unsigned long i = 0; i < n.n; ++i) r *= Rational(t - i);
      return r / Rational(factorial(n.n));
    }
    case K::Sum: return eval(*n.a, t, p) + eval(*n.b, t, p);
    case K::Product: return eval(*n.a, t, p) * eval(*n.b, t, p);
    case K::Precompose: return eval(*n.a, t * pow_p(p, static_cast<unsigned long>(n.l)), p);
    case K::PowerDifference: {
      Rational f = eval(*n.a, t, p), g = eval(*n.b, t, p), fp = 1, gp = 1;
      for (unsigned long i = 0; i < p; ++i) fp *= f, gp *= g;
      return fp - gp;
    }
    case K::Wavelet: return (*n.w)(t);
  }
  return 0;
}

DeltaBound product_bound(const DeltaBound& x, const DeltaBound& y) {
  // Coefficient of chi_k in fg is a_k g(k) + b_k f(k_-), so each factor's
  // Delta pairs with the other's value floor.
  return {std::min(sat_add(x.delta, y.value_floor), sat_add(y.delta, x.value_floor)),
          sat_add(x.value_floor, y.value_floor)};
}

DeltaBound sum_bound(const DeltaBound& x, const DeltaBound& y) {
  return {std::min(x.delta, y.delta), std::min(x.value_floor, y.value_floor)};
}

DeltaBound scale_bound(const DeltaBound& x, const Rational& c, unsigned long p) {
  if (c == 0) return {kInfiniteValuation, kInfiniteValuation};
  long v = vp(c, p);
  return {sat_add(x.delta, v), sat_add(x.value_floor, v)};
}

DeltaBound bound(const DeltaExpr::Node& n, unsigned long p) {
  using K = DeltaExpr::Kind;
  switch (n.kind) {
    case K::Monomial: {
      if (n.c == 0) return {kInfiniteValuation, kInfiniteValuation};
      long v = vp(n.c, p);
      // a_k = c (k^n - k_-^n) is divisible by c p^{l(k)-1}; the -1 is attained at n = 1.
      return {n.n == 0 ? v : v - 1, v};
    }
    case K::Binomial: return {-vdp_data(Integer(n.n), p).length, 0};
    case K::Sum: return sum_bound(bound(*n.a, p), bound(*n.b, p));
    case K::Product: return product_bound(bound(*n.a, p), bound(*n.b, p));
    case K::Precompose: {
      DeltaBound inner = bound(*n.a, p);
      Rational f0 = eval(*n.a, 0, p);
      long v0 = (f0 == 0) ? kInfiniteValuation : vp(f0, p);
      long need = sat_add(inner.delta, n.l);
      if (!is_infinite(need) && !is_infinite(v0) && v0 < need)
        throw DomainError("precomposition with [p^" + std::to_string(n.l) + "]: side condition nu_p(f(0)) = " +
                          std::to_string(v0) + " >= Delta bound + l = " + std::to_string(need) + " fails");
      return {need, inner.value_floor};
    }
    case K::PowerDifference: {
      // f^p - g^p = sum_{i=1}^{p} binom(p,i) (f-g)^i g^{p-i}
      DeltaBound f = bound(*n.a, p), g = bound(*n.b, p);
      DeltaBound h = sum_bound(f, g);
      DeltaBound total{kInfiniteValuation, kInfiniteValuation};
      for (unsigned long i = 1; i <= p; ++i) {
        DeltaBound term = h;
        for (unsigned long j = 1; j < i; ++j) term = product_bound(term, h);
        for (unsigned long j = 0; j < p - i; ++j) term = product_bound(term, g);
        total = sum_bound(total, scale_bound(term, Rational(binomial(p, i)), p));
      }
      return total;
    }
    case K::Wavelet: {
      long d = kInfiniteValuation, fl = kInfiniteValuation;
      for (std::size_t k = 0; k < n.w->coeffs.size(); ++k) {
        const Rational& a = n.w->coeffs[k];
        if (a == 0) continue;
        d = std::min(d, vp(a, p) - vdp_data(Integer(k), n.w->p).length);
      }
      for (std::size_t t = 0; t < n.w->coeffs.size(); ++t) {
        Rational v = (*n.w)(Integer(t));
        if (v != 0) fl = std::min(fl, vp(v, p));
      }
      return {d, fl};
    }
  }
  return {0, 0};
}

}  // namespace

DeltaExpr DeltaExpr::monomial(const Rational& c, unsigned long n) {
  Node x;
  x.kind = Kind::Monomial;
  x.c = c;
  x.n = n;
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr DeltaExpr::binomial(unsigned long m) {
  Node x;
  x.kind = Kind::Binomial;
  x.n = m;
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr DeltaExpr::wavelet(WaveletExpansion w) {
  Node x;
  x.kind = Kind::Wavelet;
  x.w = std::make_shared<const WaveletExpansion>(std::move(w));
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr DeltaExpr::power_difference(const DeltaExpr& f, const DeltaExpr& g) {
  Node x;
  x.kind = Kind::PowerDifference;
  x.a = f.node_;
  x.b = g.node_;
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr DeltaExpr::precompose(long l) const {
  if (l < 0) throw DomainError("precompose: l must be nonnegative");
  Node x;
  x.kind = Kind::Precompose;
  x.a = node_;
  x.l = l;
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr::Kind DeltaExpr::kind() const { return node_->kind; }

Rational DeltaExpr::operator()(const Integer& t, unsigned long p) const { return eval(*node_, t, p); }

DeltaExpr operator+(const DeltaExpr& a, const DeltaExpr& b) {
  DeltaExpr::Node x;
  x.kind = DeltaExpr::Kind::Sum;
  x.a = a.node_;
  x.b = b.node_;
  return DeltaExpr(make(std::move(x)));
}

DeltaExpr operator-(const DeltaExpr& a, const DeltaExpr& b) {
  return a + DeltaExpr::monomial(-1, 0) * b;
}

DeltaExpr operator*(const DeltaExpr& a, const DeltaExpr& b) {
  DeltaExpr::Node x;
  x.kind = DeltaExpr::Kind::Product;
  x.a = a.node_;
  x.b = b.node_;
  return DeltaExpr(make(std::move(x)));
}

DeltaBound delta_rule_bound(const DeltaExpr& e, unsigned long p) {
  require_prime(p);
  if (e.node_->kind == DeltaExpr::Kind::Wavelet && e.node_->w->p != p)
    throw DomainError("wavelet literal was expanded for a different prime");
  return bound(*e.node_, p);
}

long delta_truncated(const DeltaExpr& e, unsigned long p, long depth) {
  WaveletExpansion w = wavelet_coeffs([&](const Integer& t) { return e(t, p); }, p, depth);
  long d = kInfiniteValuation;
  for (std::size_t k = 0; k < w.coeffs.size(); ++k)
    if (w.coeffs[k] != 0) d = std::min(d, vp(w.coeffs[k], p) - vdp_data(Integer(k), p).length);
  return d;
}

}  // namespace padicl
