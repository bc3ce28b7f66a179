#include "padicl/forms.hpp"

#include "padicl/lambert.hpp"
#include "padicl/zeta.hpp"

#include <algorithm>
#include <map>

namespace padicl {

namespace {

unsigned long to_ulong(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw DomainError(std::string(what) + " is too large");
  return x.get_ui();
}


Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

void fill_derived(FormParameters& fp) {
  if (fp.r + fp.l + 1 < 0) throw DomainError("Q = p^{r+l+1} needs r + l + 1 >= 0");
  fp.Q = pow_p(fp.p, static_cast<unsigned long>(fp.r + fp.l + 1));
  fp.D = Integer(fp.d_prime) * pow_p(fp.p, static_cast<unsigned long>(fp.l));
}

}  // namespace

long FormParameters::m_of(long n) const {
  if (n < 1) throw DomainError("N(n) needs n >= 1");
  return floor_log(Integer(n) * Integer(d_prime), p) + 1;
}

Integer FormParameters::N(long n) const {
  return pow_p(p, static_cast<unsigned long>(l)) * (pow_p(p, static_cast<unsigned long>(m_of(n))) - 1);
}

Integer FormParameters::sigma(long n) const {
  return pow_p(p, static_cast<unsigned long>(l + r)) * Integer(n) - 1;
}

bool FormParameters::s_at_least_pQD() const { return Integer(s) >= Integer(p) * Q * D; }
bool FormParameters::p_minus_1_divides_s() const { return s % static_cast<long>(p - 1) == 0; }
bool FormParameters::stride_ok(long n) const {
  return Integer(n + 1) % pow_p(p, static_cast<unsigned long>(std::max(0L, l + r))) == 0;
}

FormParameters choose_params(const DirichletCharacter& chi, unsigned long p, long s, const Rational& epsilon,
                             std::optional<long> l) {
  require_prime(p);
  return choose_params(chi, p, s, epsilon, default_embedding(chi, p), l);
}

FormParameters choose_params(const DirichletCharacter& chi, unsigned long p, long s, const Rational& epsilon,
                             const PadicEmbedding& e, std::optional<long> l) {
  if (s < 1) throw DomainError("s must be at least 1");
  ChiPadicData data = chi_padic_data(chi, p, e);
  FormParameters fp;
  fp.p = p;
  fp.s = s;
  fp.delta = data.delta;
  fp.r = data.r;
  fp.l0 = data.l0;
  fp.d_prime = data.d_prime;
  fp.epsilon = epsilon;
  fp.ell = ell_of_s(s, epsilon, p, data.d_prime, data.r);
  // Construction only needs l >= max(1, l0); integration additionally needs l >= 2 for p = 2,
  // which the evaluation routines check.
  const long lmin = std::max(1L, data.l0);
  fp.l = l ? *l : std::max(fp.ell, minimal_level(chi, p));
  if (fp.l < lmin)
    throw DomainError("l = " + std::to_string(fp.l) + " violates l >= max(1, l0) = " + std::to_string(lmin));
  fill_derived(fp);
  return fp;
}

FormParameters hurwitz_params(unsigned long p, const Rational& x, long s, const Rational& epsilon,
                              std::optional<long> l) {
  require_prime(p);
  if (s < 1) throw DomainError("s must be at least 1");
  if (x <= 0 || x > 1) throw DomainError("Hurwitz forms need 0 < x <= 1; shift x first");
  unsigned long d = to_ulong(x.get_den(), "denominator of x");
  FormParameters fp;
  fp.p = p;
  fp.s = s;
  fp.delta = -2;
  fp.r = 0;
  fp.hurwitz = true;
  fp.epsilon = epsilon;
  while (d % p == 0) d /= p, ++fp.l0;
  fp.d_prime = d;
  if (fp.l0 < 1) throw DomainError("Hurwitz forms need |x|_p > 1");
  fp.ell = ell_of_s(s, epsilon, p, fp.d_prime, 0);
  const long lmin = std::max(fp.l0, p == 2 ? 2L : 1L);
  fp.l = l ? *l : std::max(fp.ell, lmin);
  if (fp.l < lmin) throw DomainError("l = " + std::to_string(fp.l) + " violates l >= " + std::to_string(lmin));
  fill_derived(fp);
  return fp;
}

RnFunction build_rn(const FormParameters& fp, long n) {
  if (n < 1) throw DomainError("build_rn: n must be at least 1");
  RnFunction rn;
  rn.n = n;
  rn.s = fp.s;
  rn.N = fp.N(n);
  const unsigned long N = to_ulong(rn.N, "N(n)");
  const unsigned long Q = to_ulong(fp.Q, "Q");
  const unsigned long s = static_cast<unsigned long>(fp.s);
  FactoredTerm t;
  t.coeff = Rational(ipow(factorial(static_cast<unsigned long>(n)), s) *
                     ipow(multinomial_packed(N, static_cast<unsigned long>(n)), Q));
  t.factors.emplace_back(Polynomial::binomial_basis(N).compose_linear(Rational(fp.D), Rational(rn.N)), Q);
  if (2 + fp.delta > 0)
    t.factors.emplace_back(Polynomial::linear(Rational(fp.D), 0), static_cast<unsigned long>(2 + fp.delta));
  for (long k = 0; k <= n; ++k) t.poles.emplace_back(Rational(k), s);
  rn.term = std::move(t);
  rn.degree = rn.term.degree();
  if (rn.degree >= -1)
    throw DomainError("R_n has degree " + std::to_string(rn.degree) + " >= -1; increase s");
  return rn;
}

Rational PartialFractionTable::operator()(const Rational& t) const {
  Rational acc = 0;
  for (long k = 0; k <= n; ++k) {
    Rational base = t + k;
    if (base == 0) throw DomainError("partial fraction evaluated at a pole");
    Rational inv = 1 / base, pw = inv;
    for (long i = 1; i <= s; ++i) {
      acc += at(i, k) * pw;
      pw *= inv;
    }
  }
  return acc;
}

PartialFractionTable partial_fractions(const FactoredTerm& f) {
  if (f.poles.empty()) throw DomainError("partial_fractions: no poles");
  std::map<Integer, unsigned long> order;
  for (const auto& [a, m] : f.poles) {
    if (a.get_den() != 1 || a < 0) throw DomainError("partial_fractions: poles must be at 0, -1, ..., -n");
    order[a.get_num()] += m;
  }
  const long n = static_cast<long>(order.size()) - 1;
  const unsigned long s = order.begin()->second;
  long k_expect = 0;
  for (const auto& [k, m] : order) {
    if (k != k_expect++) throw DomainError("partial_fractions: poles must be exactly 0, -1, ..., -n");
    if (m != s) throw DomainError("partial_fractions: all poles must have the same order");
  }
  if (f.degree() >= 0) throw DomainError("partial_fractions: a polynomial part is not supported (degree >= 0)");

  PartialFractionTable tab;
  tab.n = n;
  tab.s = static_cast<long>(s);
  tab.r.assign(static_cast<std::size_t>(n + 1), std::vector<Rational>(s, 0));
  for (long k = 0; k <= n; ++k) {
    // f(t)(t+k)^s with t = u - k, as a series in u modulo u^s.
    Polynomial num = Polynomial::constant(f.coeff);
    for (const auto& [poly, e] : f.factors)
      num = num.mul_trunc(poly.compose_linear(1, Rational(-k)).pow_trunc(e, s), s);
    Polynomial cof = Polynomial::constant(1);
    for (long kk = 0; kk <= n; ++kk)
      if (kk != k) cof = cof.mul_trunc(Polynomial::linear(1, Rational(kk - k)), s);
    Polynomial g = num.mul_trunc(cof.pow_trunc(s, s).inverse_trunc(s), s);
    for (unsigned long i = 1; i <= s; ++i) tab.r[static_cast<std::size_t>(k)][i - 1] = g.coeff(s - i);
  }
  return tab;
}

Rational rho_higher(const PartialFractionTable& t, long i) {
  if (i < 1 || i > t.s) throw DomainError("rho_higher: i out of range");
  Rational acc = 0;
  for (long k = 0; k <= t.n; ++k) acc += t.at(i, k);
  return acc * i;
}

Rational rho_zero(const PartialFractionTable& t, const Rational& x) {
  // tails[i-1] = sum_{k > nu} r_{i,k}, updated as nu decreases.
  std::vector<Rational> tails(static_cast<std::size_t>(t.s), 0);
  Rational acc = 0;
  for (long nu = t.n - 1; nu >= 0; --nu) {
    for (long i = 1; i <= t.s; ++i) tails[static_cast<std::size_t>(i - 1)] += t.at(i, nu + 1);
    Rational base = x + nu;
    if (base == 0) throw DomainError("rho_zero: x hits a pole at nu = " + std::to_string(nu));
    Rational inv = 1 / base, pw = inv * inv;
    for (long i = 1; i <= t.s; ++i) {
      const Rational& c = tails[static_cast<std::size_t>(i - 1)];
      if (c != 0) acc += c * i * pw;
      pw *= inv;
    }
  }
  return -acc;
}

Integer form_scale(long s, long n) {
  if (s < 1) throw DomainError("form_scale: s must be positive");
  Integer dn = n >= 1 ? lcm_upto(static_cast<unsigned long>(n)) : Integer(1);
  return factorial(static_cast<unsigned long>(s - 1)) * ipow(dn, static_cast<unsigned long>(s - 1));
}

namespace {

void assert_integral(const CyclotomicElement& c, const std::string& what) {
  if (c.denominator() != 1)
    throw InvariantError("integrality violated for " + what + ": denominator " + c.denominator().get_str());
}

Rational form_scale_q(const FormParameters& fp, long n) { return Rational(form_scale(fp.s, n)); }

}  // namespace

LinearFormOverK lambda_form(const FormParameters& fp, const PartialFractionTable& t, const DirichletCharacter& chi) {
  if (t.s != fp.s) throw DomainError("lambda_form: table s does not match the parameters");
  LinearFormOverK out;
  out.n = t.n;
  out.params = fp;
  const unsigned long m = chi.order();
  const Rational c = form_scale_q(fp, t.n);
  std::vector<Rational> by_exp(m, 0);
  for (Integer j = 1; j <= fp.D; ++j) {
    if (j % fp.p == 0) continue;
    auto ex = chi.exponent(j);
    if (ex) by_exp[static_cast<std::size_t>(*ex)] += rho_zero(t, make_rational(j, fp.D));
  }
  CyclotomicElement l0(m);
  for (unsigned long e = 0; e < m; ++e)
    if (by_exp[e] != 0) l0 += CyclotomicElement::root_power(static_cast<long>(e), m) * (c * by_exp[e]);
  assert_integral(l0, "lambda_0");
  out.coeffs.push_back(l0);
  Rational Dp = Rational(fp.D);
  for (long i = 1; i <= fp.s; ++i) {
    Dp *= Rational(fp.D);  // D^{i+1}
    CyclotomicElement li = CyclotomicElement::from_rational(c * Dp * rho_higher(t, i), m);
    assert_integral(li, "lambda_" + std::to_string(i));
    out.coeffs.push_back(li);
  }
  return out;
}

PadicApprox character_integral_sum(const FormParameters& fp, const RnFunction& rn, const DirichletCharacter& chi,
                                   const PadicEmbedding& e, long N) {
  PadicApprox acc = PadicApprox::zero(fp.p, N);
  for (Integer j = 1; j <= fp.D; ++j) {
    if (j % fp.p == 0 || !chi.exponent(j)) continue;
    PadicApprox v = integral_mahler(Integrand(rn.term.shifted(make_rational(j, fp.D))), fp.p, N);
    acc += v * chi.padic_value(j, e, N + 1);
  }
  return acc.reduced(N);
}

IdentityReport evaluate_form_identity(const FormParameters& fp, long n, const DirichletCharacter& chi,
                                      const PadicEmbedding& e, long precision) {
  if (fp.hurwitz) throw DomainError("evaluate_form_identity: use hurwitz_variant_form for Hurwitz parameters");
  RnFunction rn = build_rn(fp, n);
  PartialFractionTable tab = partial_fractions(rn.term);
  LinearFormOverK form = lambda_form(fp, tab, chi);
  const Rational c = form_scale_q(fp, n);
  const long vc = vp(c, fp.p);

  IdentityReport rep;
  rep.precision = precision;
  rep.lhs = character_integral_sum(fp, rn, chi, e, precision - vc).scaled(c).reduced(precision);

  PadicApprox rhs = cyclo_embed(form.coeffs[0], e, precision);
  for (long i = 1; i <= fp.s; ++i) {
    const CyclotomicElement& li = form.coeffs[static_cast<std::size_t>(i)];
    if (li.is_zero()) continue;
    Rational q = li.rational_value();
    long vq = vp(q, fp.p);
    // lambda_i L_p(i+1, chi omega^{-i})
    rhs += lp_value(i + 1, chi, -i, fp.p, fp.l, e, precision - vq).scaled(q);
  }
  rep.rhs = rhs.reduced(precision);
  rep.agreement = agreement(rep.lhs, rep.rhs);
  rep.lhs_valuation = rep.lhs.valuation();
  return rep;
}

IdentityReport per_x_identity(const FormParameters& fp, long n, const Rational& x, long precision) {
  require_hurwitz_domain(x, fp.p);
  RnFunction rn = build_rn(fp, n);
  PartialFractionTable tab = partial_fractions(rn.term);
  IdentityReport rep;
  rep.precision = precision;
  rep.lhs = integral_mahler(Integrand(rn.term.shifted(x)), fp.p, precision);
  PadicApprox rhs = PadicApprox::from_rational(rho_zero(tab, x), fp.p, precision);
  for (long i = 1; i <= fp.s; ++i) {
    Rational rho = rho_higher(tab, i);
    if (rho == 0) continue;
    // omega(x)^{-i} zeta_p(i+1, x) is the twisted value at i+1.
    rhs += twisted_zeta(i + 1, x, fp.p, precision - vp(rho, fp.p)).scaled(rho);
  }
  rep.rhs = rhs.reduced(precision);
  rep.agreement = agreement(rep.lhs, rep.rhs);
  rep.lhs_valuation = rep.lhs.valuation();
  return rep;
}

HurwitzForm hurwitz_variant_form(const FormParameters& fp, const Rational& x, long n, long precision) {
  if (!fp.hurwitz) throw DomainError("hurwitz_variant_form: parameters are not in Hurwitz mode");
  if (x <= 0 || x > 1) throw DomainError("hurwitz_variant_form: reduce x into (0, 1] with the shift identity first");
  require_hurwitz_domain(x, fp.p);
  const unsigned long p = fp.p;
  HurwitzForm out;
  out.x = x;
  out.d = x.get_den();
  out.j0 = static_cast<long>(to_ulong(x.get_num(), "numerator of x"));
  if (out.d != Integer(fp.d_prime) * pow_p(p, static_cast<unsigned long>(fp.l0)))
    throw DomainError("hurwitz_variant_form: parameters were built for a different denominator");

  RnFunction rn = build_rn(fp, n);
  PartialFractionTable tab = partial_fractions(rn.term);
  const Rational c = form_scale_q(fp, n);
  const Integer M = pow_p(p, static_cast<unsigned long>(fp.l - fp.l0));

  // omega(j0) = zeta_m^k where zeta_m maps to the Teichmuller lift of the embedding residue.
  const unsigned long m = teichmuller_order(p);
  PadicEmbedding emb(p, m);
  const unsigned long q = q_p(p);
  long k = 0;
  {
    unsigned long target = static_cast<unsigned long>(out.j0) % q, acc = 1 % q;
    while (acc != target) {
      acc = (acc * emb.residue()) % q;
      if (++k > static_cast<long>(q)) throw InvariantError("discrete log of j0 not found");
    }
  }

  std::vector<Rational> points;
  for (Integer j = 0; j < M; ++j) points.push_back(make_rational(Integer(out.j0) + out.d * j, fp.D));

  Rational l0sum = 0;
  for (const auto& y : points) l0sum += rho_zero(tab, y);
  out.form.n = n;
  out.form.params = fp;
  out.form.coeffs.push_back(CyclotomicElement::from_rational(c * l0sum, m));
  assert_integral(out.form.coeffs[0], "tilde lambda_0");
  std::vector<Rational> qs(static_cast<std::size_t>(fp.s + 1), 0);
  Rational Dp = 1;
  for (long i = 1; i <= fp.s; ++i) {
    Dp *= Rational(fp.D);
    qs[static_cast<std::size_t>(i)] = c * rho_higher(tab, i) * Dp;
    CyclotomicElement li = CyclotomicElement::root_power(-k * i, m) * qs[static_cast<std::size_t>(i)];
    assert_integral(li, "tilde lambda_" + std::to_string(i));
    out.form.coeffs.push_back(li);
  }

  // Identity: c sum_j int R_n(t + y_j) = tilde lambda_0
  //   + sum_i tilde lambda_i p^{l-l0} <d'>^{-i} zeta_p(i+1, x).
  IdentityReport& rep = out.identity;
  rep.precision = precision;
  const long vc = vp(c, p);
  PadicApprox lhs = PadicApprox::zero(p, precision - vc);
  for (const auto& y : points) lhs += integral_mahler(Integrand(rn.term.shifted(y)), p, precision - vc);
  rep.lhs = lhs.scaled(c).reduced(precision);

  const long shift = fp.l - fp.l0;
  const long vx = -fp.l0;
  PadicApprox rhs = PadicApprox::from_rational(c * l0sum, p, precision);
  for (long i = 1; i <= fp.s; ++i) {
    const Rational& qi = qs[static_cast<std::size_t>(i)];
    if (qi == 0) continue;
    const long Pz = precision - vp(qi, p) - shift;
    PadicApprox z = zeta_p(i + 1, x, p, Pz);
    // Units are needed to the precision of z plus its (negative) valuation.
    const long Pu = Pz - vx * (i + 1) + 4;
    PadicApprox unit = emb.root_image(Pu).pow(-k * i) * angle(Rational(fp.d_prime), p, Pu).pow(-i);
    rhs += (z * unit).scaled(qi * Rational(pow_p(p, static_cast<unsigned long>(shift))));
  }
  rep.rhs = rhs.reduced(precision);
  rep.agreement = agreement(rep.lhs, rep.rhs);
  rep.lhs_valuation = rep.lhs.valuation();
  return out;
}

}  // namespace padicl
