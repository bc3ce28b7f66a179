#include "padicl/volkenborn.hpp"

#include <algorithm>
#include <cctype>

namespace padicl {

// ---------------------------------------------------------------- integrands

FactoredTerm FactoredTerm::constant(const Rational& c) {
  FactoredTerm t;
  t.coeff = c;
  return t;
}

FactoredTerm FactoredTerm::polynomial(const Polynomial& poly) {
  FactoredTerm t;
  if (poly.is_zero()) {
    t.coeff = 0;
  } else if (poly.degree() == 0) {
    t.coeff = poly.coeff(0);
  } else {
    t.factors.emplace_back(poly, 1);
  }
  return t;
}

FactoredTerm FactoredTerm::pole(const Rational& a, unsigned long m) {
  FactoredTerm t;
  if (m > 0) t.poles.emplace_back(a, m);
  return t;
}

long FactoredTerm::degree() const {
  long d = 0;
  for (const auto& [poly, e] : factors) d += poly.degree() * static_cast<long>(e);
  for (const auto& [a, m] : poles) d -= static_cast<long>(m);
  return d;
}

Rational FactoredTerm::operator()(const Rational& t) const {
  Rational r = coeff;
  if (r == 0) return 0;
  for (const auto& [poly, e] : factors) {
    Rational v = poly(t), acc = 1;
    for (unsigned long i = 0; i < e; ++i) acc *= v;
    r *= acc;
  }
  for (const auto& [a, m] : poles) {
    Rational v = t + a;
    if (v == 0) throw DomainError("integrand has a pole at t = " + to_string(t));
    Rational acc = 1;
    for (unsigned long i = 0; i < m; ++i) acc *= v;
    r /= acc;
  }
  return r;
}

FactoredTerm FactoredTerm::shifted(const Rational& x) const {
  FactoredTerm r;
  r.coeff = coeff;
  for (const auto& [poly, e] : factors) r.factors.emplace_back(poly.compose_linear(1, x), e);
  for (const auto& [a, m] : poles) r.poles.emplace_back(a + x, m);
  return r;
}

FactoredTerm& FactoredTerm::operator*=(const FactoredTerm& o) {
  coeff *= o.coeff;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  for (const auto& [a, m] : o.poles) {
    auto it = std::find_if(poles.begin(), poles.end(), [&](const auto& q) { return q.first == a; });
    if (it != poles.end()) {
      it->second += m;
    } else {
      poles.emplace_back(a, m);
    }
  }
  return *this;
}

std::pair<Polynomial, Polynomial> FactoredTerm::expanded() const {
  Polynomial num = Polynomial::constant(coeff), den = Polynomial::constant(1);
  for (const auto& [poly, e] : factors) num *= poly.pow(e);
  for (const auto& [a, m] : poles) den *= Polynomial::linear(1, a).pow(m);
  return {num, den};
}

Rational Integrand::operator()(const Rational& t) const {
  Rational r = 0;
  for (const auto& term : terms) r += term(t);
  return r;
}

Rational Integrand::derivative_at(const Rational& t) const {
  Rational r = 0;
  for (const auto& term : terms) {
    auto [num, den] = term.expanded();
    Rational d = den(t);
    if (d == 0) throw DomainError("integrand has a pole at t = " + to_string(t));
    r += (num.derivative()(t) * d - num(t) * den.derivative()(t)) / (d * d);
  }
  return r;
}

Integrand Integrand::shifted(const Rational& x) const {
  Integrand r;
  for (const auto& term : terms) r.terms.push_back(term.shifted(x));
  return r;
}

bool Integrand::has_poles() const {
  for (const auto& term : terms)
    if (!term.poles.empty() && term.coeff != 0) return true;
  return false;
}

Polynomial Integrand::as_polynomial() const {
  Polynomial r;
  for (const auto& term : terms) {
    if (term.coeff == 0) continue;
    if (!term.poles.empty()) throw DomainError("integrand is not a polynomial");
    r += term.expanded().first;
  }
  return r;
}

Integrand operator+(Integrand a, const Integrand& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

Integrand operator-(Integrand a, const Integrand& b) {
  for (auto t : b.terms) {
    t.coeff = -t.coeff;
    a.terms.push_back(std::move(t));
  }
  return a;
}

Integrand operator*(const Integrand& a, const Integrand& b) {
  Integrand r;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      FactoredTerm t = x;
      t *= y;
      if (t.coeff != 0) r.terms.push_back(std::move(t));
    }
  return r;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Integrand parse() {
    Integrand r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression: " + what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  long signed_int() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Integer v = integer();
    if (!v.fits_slong_p()) fail("exponent too large");
    return neg ? -v.get_si() : v.get_si();
  }

  Integrand expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Integrand r = term();
    if (neg) r = Integrand(FactoredTerm::constant(0)) - r;
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  Integrand term() {
    Integrand r = power();
    for (;;) {
      if (eat('*')) r = r * power();
      else if (eat('/')) r = r * inverse_power(power(), 1);
      else return r;
    }
  }

  Integrand power() {
    Integrand base = atom();
    if (!eat('^')) return base;
    long k = signed_int();
    if (k < 0) return inverse_power(base, static_cast<unsigned long>(-k));
    Integrand r(FactoredTerm::constant(1));
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
  }

  Integrand atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return FactoredTerm::constant(Rational(integer()));
    if (s_.compare(pos_, 6, "binom(") == 0) {
      pos_ += 6;
      Polynomial arg = expr().as_polynomial();
      if (!eat(',')) fail("expected ','");
      long m = signed_int();
      if (m < 0) fail("binom order must be nonnegative");
      if (!eat(')')) fail("expected ')'");
      Polynomial r = Polynomial::constant(1);
      for (long i = 0; i < m; ++i) r *= arg - Polynomial::constant(i);
      r *= Rational(1, factorial(static_cast<unsigned long>(m)));
      return FactoredTerm::polynomial(r);
    }
    if (c == 't') {
      ++pos_;
      return FactoredTerm::polynomial(Polynomial::linear(1, 0));
    }
    if (eat('(')) {
      Integrand r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integrand inverse_power(const Integrand& base, unsigned long m) {
    Polynomial poly;
    try {
      poly = base.as_polynomial();
    } catch (const DomainError&) {
      fail("only constants and linear polynomials can be inverted");
    }
    if (poly.is_zero()) fail("division by zero");
    if (poly.degree() > 1) fail("only constants and linear polynomials can be inverted");
    Rational lead = poly.leading(), scale = 1;
    for (unsigned long i = 0; i < m; ++i) scale /= lead;
    FactoredTerm t = FactoredTerm::constant(scale);
    if (poly.degree() == 1) t *= FactoredTerm::pole(poly.coeff(0) / lead, m);
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Integrand parse_integrand(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- wavelets

VdpData vdp_data(const Integer& k, unsigned long p) {
  if (k < 0) throw DomainError("vdp_data: k must be nonnegative");
  if (k == 0) return {0, 0};
  auto dg = digits(k, p);
  long l = static_cast<long>(dg.size());
  Integer lead = pow_p(p, static_cast<unsigned long>(l - 1)) * dg.back();
  return {l, k - lead};
}

bool wavelet_indicator(const Integer& k, const Integer& t, unsigned long p) {
  long l = vdp_data(k, p).length;
  Integer mod = pow_p(p, static_cast<unsigned long>(l)), r;
  mpz_fdiv_r(r.get_mpz_t(), Integer(t - k).get_mpz_t(), mod.get_mpz_t());
  return r == 0;
}

Rational WaveletExpansion::operator()(const Integer& t) const {
  Rational r = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0 && wavelet_indicator(Integer(k), t, p)) r += coeffs[k];
  return r;
}

WaveletExpansion wavelet_coeffs(const std::function<Rational(const Integer&)>& f, unsigned long p, long depth) {
  require_prime(p);
  if (depth < 0) throw DomainError("wavelet_coeffs: depth must be nonnegative");
  Integer size = pow_p(p, static_cast<unsigned long>(depth));
  if (size > (1 << 24)) throw DomainError("wavelet_coeffs: p^depth exceeds 2^24 coefficients");
  std::size_t n = size.get_ui();
  std::vector<Rational> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = f(Integer(k));
  WaveletExpansion w{p, depth, std::vector<Rational>(n)};
  for (std::size_t k = 0; k < n; ++k)
    w.coeffs[k] = (k == 0) ? values[0] : values[k] - values[vdp_data(Integer(k), p).k_minus.get_ui()];
  return w;
}

CertifiedValue integral_wavelet(const WaveletExpansion& w, long tail_bound) {
  Rational sum = 0;
  for (std::size_t k = 0; k < w.coeffs.size(); ++k) {
    if (w.coeffs[k] == 0) continue;
    long l = vdp_data(Integer(k), w.p).length;
    sum += w.coeffs[k] / Rational(pow_p(w.p, static_cast<unsigned long>(l)));
  }
  return {sum, tail_bound};
}

// ---------------------------------------------------------------- shared p-adic term machinery

namespace {

Integer mod_pow(const Integer& b, long e, const Integer& m) {
  Integer r, base = b;
  if (e < 0) {
    if (mpz_invert(base.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) == 0)
      throw InvariantError("mod_pow: non-invertible base");
    e = -e;
  }
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
  return r;
}

/// Unit part of a nonzero rational modulo p^K.
Integer unit_mod(const Rational& x, unsigned long p, long K) {
  return PadicApprox::from_rational(x, p, vp(x, p) + K).unit();
}

/// Scale data of one term under the pole precondition.
struct TermScale {
  long base;   ///< certified lower bound on nu_p(f(k)) for integers k, and on nu_p(c_m)
  long deg_p;  ///< numerator degree
  long vmin;   ///< min over poles of -nu_p(a); 0 without poles
};

void check_poles(const FactoredTerm& t, unsigned long p) {
  for (const auto& [a, m] : t.poles) {
    long v = vp(a, p);
    if (a == 0 || v >= 0)
      throw DomainError("pole at t = " + to_string(-a) + " lies in Z_" + std::to_string(p) +
                        " (need nu_p(a) < 0)");
    if (p == 2 && v > -2)
      throw DomainError("pole at t = " + to_string(-a) + ": p = 2 needs nu_2(a) <= -2");
  }
}

TermScale term_scale(const FactoredTerm& t, unsigned long p) {
  TermScale s{vp(t.coeff, p), 0, 0};
  for (const auto& [poly, e] : t.factors) {
    s.base += static_cast<long>(e) * poly.gauss_valuation(p);
    s.deg_p += static_cast<long>(e) * poly.degree();
  }
  bool first = true;
  for (const auto& [a, m] : t.poles) {
    long w = -vp(a, p);
    s.base += static_cast<long>(m) * w;
    s.vmin = first ? w : std::min(s.vmin, w);
    first = false;
  }
  return s;
}

bool term_is_zero(const FactoredTerm& t) {
  if (t.coeff == 0) return true;
  for (const auto& [poly, e] : t.factors)
    if (poly.is_zero() && e > 0) return true;
  return false;
}

/// f(k) / p^base modulo p^K for an integer k.
Integer scaled_value(const FactoredTerm& t, const Integer& k, unsigned long p, long base, long K,
                     const Integer& modulus) {
  long v = vp(t.coeff, p);
  Integer unit = unit_mod(t.coeff, p, K);
  Rational kr(k);
  for (const auto& [poly, e] : t.factors) {
    Rational val = poly(kr);
    if (val == 0) return 0;
    v += static_cast<long>(e) * vp(val, p);
    unit = unit * mod_pow(unit_mod(val, p, K), static_cast<long>(e), modulus) % modulus;
  }
  for (const auto& [a, m] : t.poles) {
    Rational val = kr + a;
    v -= static_cast<long>(m) * vp(val, p);
    unit = unit * mod_pow(unit_mod(val, p, K), -static_cast<long>(m), modulus) % modulus;
  }
  long shift = v - base;
  if (shift < 0) throw InvariantError("Mahler scale bound violated at k = " + k.get_str());
  if (shift >= K) return 0;
  return unit * pow_p(p, static_cast<unsigned long>(shift)) % modulus;
}

/// Removes the factors p from x and returns how many there were.
long strip_p(Integer& x, unsigned long p) {
  if (x == 0) return 0;
  Integer pz = p;
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

/// f(k) / p^base modulo p^K as num/den with den a unit, so a long sum needs a single inversion.
std::pair<Integer, Integer> scaled_fraction(const FactoredTerm& t, const Integer& k, unsigned long p, long base,
                                            long K, const Integer& modulus) {
  auto raise = [&](Integer& acc, const Integer& b, unsigned long e) {
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), e, modulus.get_mpz_t());
    acc = acc * r % modulus;
  };
  Integer num = t.coeff.get_num(), den = t.coeff.get_den();
  long v = strip_p(num, p) - strip_p(den, p);
  Rational kr(k);
  for (const auto& [poly, e] : t.factors) {
    Rational val = poly(kr);
    if (val == 0) return {0, 1};
    Integer a = val.get_num(), b = val.get_den();
    v += static_cast<long>(e) * (strip_p(a, p) - strip_p(b, p));
    raise(num, a, e);
    raise(den, b, e);
  }
  for (const auto& [a, m] : t.poles) {
    Integer top = k * a.get_den() + a.get_num(), bottom = a.get_den();
    v -= static_cast<long>(m) * (strip_p(top, p) - strip_p(bottom, p));
    raise(num, bottom, m);
    raise(den, top, m);
  }
  long shift = v - base;
  if (shift < 0) throw InvariantError("Mahler scale bound violated at k = " + k.get_str());
  if (shift >= K) return {0, 1};
  return {num * pow_p(p, static_cast<unsigned long>(shift)) % modulus, den % modulus};
}

/// Lower bound for nu_p of the m-th Mahler coefficient (pole case).
long coeff_bound(const TermScale& s, long m, unsigned long p) {
  return vp_factorial(static_cast<unsigned long>(m), p) + s.base + std::max(0L, m - s.deg_p) * s.vmin;
}

Integer fmod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

PadicApprox mahler_term(const FactoredTerm& t, unsigned long p, long N, MahlerStats& stats) {
  if (term_is_zero(t)) return PadicApprox::zero(p, N);
  if (t.poles.empty()) {
    stats.tail_bound = kInfiniteValuation;
    return PadicApprox::from_rational(integral_polynomial(t.expanded().first), p, N);
  }
  check_poles(t, p);
  TermScale s = term_scale(t, p);
  // For m >= deg_p the bound nu(m!) + (m - deg)vmin - floor_log(m+1) is nondecreasing.
  long M = std::max(0L, s.deg_p - 1);
  auto tail = [&](long M_) {
    return coeff_bound(s, M_ + 1, p) - floor_log(Integer(M_ + 2), p);
  };
  while (tail(M) < N) {
    ++M;
    if (M > kMahlerTermCap) throw PrecisionError("integral_mahler: precision unreachable within term cap");
  }
  long E = floor_log(Integer(M + 1), p);
  long K = std::max(1L, N - s.base + E);
  Integer modulus = pow_p(p, static_cast<unsigned long>(K));
  std::vector<Integer> row(static_cast<std::size_t>(M + 1));
  for (long k = 0; k <= M; ++k) row[static_cast<std::size_t>(k)] = scaled_value(t, Integer(k), p, s.base, K, modulus);
  Integer acc = 0;
  for (long m = 0; m <= M; ++m) {
    const Integer& c = row[0];
    if (c != 0) {
      Integer w = m + 1;
      long vw = vp(w, p);
      Integer unit = w / pow_p(p, static_cast<unsigned long>(vw));
      Integer term = c * pow_p(p, static_cast<unsigned long>(E - vw)) * mod_pow(unit, -1, modulus);
      if (m % 2 == 0) acc += term; else acc -= term;
      acc = fmod(acc, modulus);
    }
    for (long i = 0; i + m < M; ++i) {
      row[static_cast<std::size_t>(i)] = fmod(row[static_cast<std::size_t>(i + 1)] - row[static_cast<std::size_t>(i)], modulus);
    }
  }
  stats.terms_used = std::max(stats.terms_used, M + 1);
  stats.tail_bound = std::min(stats.tail_bound, tail(M));
  return PadicApprox::from_parts(p, s.base - E, acc, K).reduced(N);
}

}  // namespace

Rational integral_polynomial(const Polynomial& f) {
  long d = f.degree();
  if (d < 0) return 0;
  std::vector<Rational> row(static_cast<std::size_t>(d + 1));
  for (long k = 0; k <= d; ++k) row[static_cast<std::size_t>(k)] = f(Rational(k));
  Rational sum = 0;
  for (long m = 0; m <= d; ++m) {
    Rational term = row[0] / Rational(m + 1);
    sum += (m % 2 == 0) ? term : Rational(-term);
    for (long i = 0; i + m < d; ++i) row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i + 1)] - row[static_cast<std::size_t>(i)];
  }
  return sum;
}

PadicApprox integral_mahler(const Integrand& f, unsigned long p, long N, MahlerStats* stats) {
  require_prime(p);
  MahlerStats local;
  local.tail_bound = kInfiniteValuation;
  PadicApprox acc = PadicApprox::zero(p, N);
  for (const auto& t : f.terms) acc += mahler_term(t, p, N, local);
  if (stats) *stats = local;
  return acc;
}

Rational integral_riemann_exact(const std::function<Rational(const Integer&)>& f, unsigned long p, long n) {
  require_prime(p);
  if (n < 0) throw DomainError("integral_riemann: level must be nonnegative");
  Integer count = pow_p(p, static_cast<unsigned long>(n));
  Rational sum = 0;
  for (Integer k = 0; k < count; ++k) sum += f(k);
  return sum / Rational(count);
}

long riemann_error_bound(const Integrand& f, unsigned long p, long n) {
  long best = kInfiniteValuation;
  for (const auto& t : f.terms) {
    if (term_is_zero(t)) continue;
    if (t.poles.empty()) {
      // Exact Mahler coefficients.
      Polynomial poly = t.expanded().first;
      long d = poly.degree();
      std::vector<Rational> row(static_cast<std::size_t>(d + 1));
      for (long k = 0; k <= d; ++k) row[static_cast<std::size_t>(k)] = poly(Rational(k));
      for (long m = 0; m <= d; ++m) {
        if (m >= 1 && row[0] != 0)
          best = std::min(best, vp(row[0], p) + n - floor_log(Integer(m), p) - vp(Integer(m + 1), p));
        for (long i = 0; i + m < d; ++i) row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i + 1)] - row[static_cast<std::size_t>(i)];
      }
      continue;
    }
    check_poles(t, p);
    TermScale s = term_scale(t, p);
    long top = std::max(1L, s.deg_p);
    for (long m = 1; m < top; ++m)
      best = std::min(best, coeff_bound(s, m, p) + n - floor_log(Integer(m), p) - vp(Integer(m + 1), p));
    // Monotone from here on.
    best = std::min(best, coeff_bound(s, top, p) + n - floor_log(Integer(top), p) - floor_log(Integer(top + 1), p));
  }
  return best;
}

PadicApprox integral_riemann(const Integrand& f, unsigned long p, long n, long N) {
  require_prime(p);
  if (n < 0) throw DomainError("integral_riemann: level must be nonnegative");
  long P = std::min(N, riemann_error_bound(f, p, n));
  PadicApprox acc = PadicApprox::zero(p, P);
  Integer count = pow_p(p, static_cast<unsigned long>(n));
  for (const auto& t : f.terms) {
    if (term_is_zero(t)) continue;
    check_poles(t, p);
    TermScale s = term_scale(t, p);
    long K = std::max(1L, P - s.base + n);
    Integer modulus = pow_p(p, static_cast<unsigned long>(K)), top = 0, bottom = 1;
    for (Integer k = 0; k < count; ++k) {
      auto [a, b] = scaled_fraction(t, k, p, s.base, K, modulus);
      top = (top * b + a * bottom) % modulus;
      bottom = bottom * b % modulus;
    }
    Integer sum = top * mod_pow(bottom, -1, modulus);
    acc += PadicApprox::from_parts(p, s.base - n, fmod(sum, modulus), K);
  }
  return acc.reduced(P);
}

TranslationReport translate_integral(const Integrand& f, unsigned long m, unsigned long p, long N) {
  Rational deriv = 0;
  for (unsigned long i = 0; i < m; ++i) deriv += f.derivative_at(Rational(i));
  PadicApprox lhs = integral_mahler(f.shifted(Rational(m)), p, N);
  PadicApprox rhs = integral_mahler(f, p, N) + PadicApprox::from_rational(deriv, p, N);
  return {lhs, rhs, agreement(lhs, rhs)};
}

}  // namespace padicl
