#include "padicl/lambert.hpp"

#include <algorithm>
#include <cmath>

namespace padicl {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw DomainError("interval division by an interval containing 0");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

namespace {

// 2 atanh(z) for 0 <= z <= 1/3, truncated with a geometric tail bound.
Interval two_atanh(const Rational& z, unsigned bits) {
  if (z == 0) return Interval::point(0);
  const unsigned terms = bits / 3 + 4;  // z^2 <= 1/9
  Rational z2 = z * z, pw = z, sum = 0;
  for (unsigned i = 0; i < terms; ++i) {
    sum += pw / Rational(2 * i + 1);
    pw *= z2;
  }
  Rational tail = pw / (Rational(2 * terms + 1) * (1 - z2));
  return {2 * sum, 2 * (sum + tail)};
}

}  // namespace

Interval log_interval(const Rational& q, unsigned bits) {
  if (q <= 0) throw DomainError("log of a non-positive number");
  if (q < 1) {
    Interval r = log_interval(1 / q, bits);
    return {-r.hi, -r.lo};
  }
  // q = 2^k m with 1 <= m < 2
  long k = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  Rational m = q;
  auto scale = [&](long e) {
    Integer pw = 1;
    mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<mp_bitcnt_t>(std::labs(e)));
    return e >= 0 ? Rational(pw) : Rational(1, 1) / Rational(pw);
  };
  m /= scale(k);
  while (m >= 2) m /= 2, ++k;
  while (m < 1) m *= 2, --k;
  m.canonicalize();
  Interval ln2 = two_atanh(Rational(1, 3), bits);
  Interval lnm = two_atanh((m - 1) / (m + 1), bits);
  return Interval::point(Rational(k)) * ln2 + lnm;
}

double lambert_w(double a) {
  if (!(a > 0)) throw DomainError("lambert_w: argument must be positive");
  double w = a < 1 ? a : std::log(a);
  for (int it = 0; it < 100; ++it) {
    double ew = std::exp(w);
    double step = (w * ew - a) / (ew * (w + 1));
    w -= step;
    if (std::fabs(step) < 1e-15 * std::max(1.0, std::fabs(w))) break;
  }
  return w;
}

long lambert_level(const Rational& a, unsigned long p) {
  require_prime(p);
  if (a <= 0) throw DomainError("lambert_level: argument must be positive");
  long L = 0;
  for (;;) {
    long next = L + 1;
    Rational factor = Rational(2 * next) * Rational(pow_p(p, static_cast<unsigned long>(2 * next)));
    // Exact comparison is never an equality since log p is irrational: refine until decided.
    bool decided = false, fits = false;
    for (unsigned bits = 64; bits <= 4096 && !decided; bits *= 2) {
      Interval v = Interval::point(factor) * log_interval(Rational(p), bits);
      if (v.hi <= a) decided = fits = true;
      else if (v.lo > a) decided = true;
    }
    if (!decided) throw PrecisionError("lambert_level: could not separate the floor");
    if (!fits) return L;
    L = next;
  }
}

long ell_of_s(long s, const Rational& epsilon, unsigned long p, unsigned long d_prime, long r) {
  if (s < 1) throw DomainError("ell_of_s: s must be positive");
  if (epsilon <= 0) throw DomainError("ell_of_s: epsilon must be positive");
  Rational denom = Rational(3 * d_prime);
  if (r + 2 >= 0) denom *= Rational(pow_p(p, static_cast<unsigned long>(r + 2)));
  else denom /= Rational(pow_p(p, static_cast<unsigned long>(-(r + 2))));
  return lambert_level(Rational(2 * s) * epsilon / denom, p);
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Holds: return "holds";
    case Tri::Fails: return "fails";
    case Tri::Undecided: return "undecided";
  }
  return "undecided";
}

Interval tau_p(unsigned long p, long l, long s) {
  Rational f = Rational(l) + Rational(1, static_cast<long>(p) - 1);
  return Interval::point(Rational(s) * f) * log_interval(Rational(p));
}

Interval tau_inf(unsigned long p, long l, long s, unsigned long d_prime, long r, unsigned long field_degree) {
  Interval ln2 = log_interval(Rational(2));
  long e = r + 2 + 2 * l;
  Rational big = Rational(d_prime) * (e >= 0 ? Rational(pow_p(p, static_cast<unsigned long>(e)))
                                             : Rational(1) / Rational(pow_p(p, static_cast<unsigned long>(-e))));
  Interval lg = log_interval(Rational(d_prime) * Rational(pow_p(p, static_cast<unsigned long>(1 + l))));
  Interval inner = Interval::point(Rational(s)) * ln2 + Interval::point(big) * lg + Interval::point(Rational(s));
  return Interval::point(Rational(field_degree)) * inner;
}

LambertReport lambert_inequality(long s, const Rational& epsilon, unsigned long p, unsigned long d_prime, long r,
                                 unsigned long field_degree) {
  LambertReport rep;
  rep.ell = ell_of_s(s, epsilon, p, d_prime, r);
  rep.tau_p = tau_p(p, rep.ell, s);
  rep.tau_inf = tau_inf(p, rep.ell, s, d_prime, r, field_degree);
  rep.ratio = rep.tau_p / rep.tau_inf;
  Interval den = Interval::point(Rational(2 * static_cast<long>(field_degree))) *
                 (Interval::point(1) + log_interval(Rational(2)));
  rep.target = Interval::point(1 - epsilon) * log_interval(Rational(s)) / den;
  if (rep.ratio.lo >= rep.target.hi) rep.verdict = Tri::Holds;
  else if (rep.ratio.hi < rep.target.lo) rep.verdict = Tri::Fails;
  else rep.verdict = Tri::Undecided;
  return rep;
}

}  // namespace padicl
