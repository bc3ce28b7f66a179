#pragma once

#include "padicl/arith.hpp"

namespace padicl {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo, hi;
  static Interval point(const Rational& q) { return {q, q}; }
  double mid() const { return Rational((lo + hi) / 2).get_d(); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);

/// Enclosure of log(q) for rational q > 0 of width about 2^-bits.
Interval log_interval(const Rational& q, unsigned bits = 64);

/// Principal branch of Lambert W on (0, inf) by Newton iteration; informational only.
double lambert_w(double a);

/// Largest integer L >= 0 with W(a) >= 2 L log p, i.e. 2 L log(p) p^{2L} <= a.
/// Certified with interval logarithms.
long lambert_level(const Rational& a, unsigned long p);

/// l(s) for the L-value forms: a = 2 s eps / (3 d' p^{r+2}).
long ell_of_s(long s, const Rational& epsilon, unsigned long p, unsigned long d_prime, long r);

enum class Tri { Holds, Fails, Undecided };
const char* to_string(Tri t);

struct LambertReport {
  long ell;
  Interval tau_p;
  Interval tau_inf;
  Interval ratio;   ///< tau_p / tau_inf
  Interval target;  ///< (1 - eps) log s / (2 [K:Q] (1 + log 2))
  Tri verdict;
};

/// tau_p(l, s) = s log p (l + 1/(p-1)).
Interval tau_p(unsigned long p, long l, long s);
/// tau_inf(l, s) = [K:Q] (s log 2 + d' p^{r+2+2l} log(d' p^{1+l}) + s).
Interval tau_inf(unsigned long p, long l, long s, unsigned long d_prime, long r, unsigned long field_degree);

LambertReport lambert_inequality(long s, const Rational& epsilon, unsigned long p, unsigned long d_prime, long r,
                                 unsigned long field_degree);

}  // namespace padicl
