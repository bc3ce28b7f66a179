#include "padicl/zeta.hpp"

#include "padicl/bernoulli.hpp"

namespace padicl {

namespace {

Rational pow_rational(const Rational& x, long k) {
  Rational r = 1;
  for (long i = 0; i < std::labs(k); ++i) r *= x;
  return k < 0 ? Rational(1 / r) : r;
}

long mod_pos(long a, long m) { return ((a % m) + m) % m; }

struct Level {
  unsigned long d_prime;
  Integer D;
};

Level level_data(const DirichletCharacter& chi, unsigned long p, long l) {
  unsigned long d = chi.modulus();
  long l0 = 0;
  while (d % p == 0) d /= p, ++l0;
  if (l < minimal_level(chi, p))
    throw DomainError("level l = " + std::to_string(l) + " below the admissible minimum " +
                      std::to_string(minimal_level(chi, p)) + " (l >= max(1, l0), and l >= 2 for p = 2)");
  return {d, Integer(d) * pow_p(p, static_cast<unsigned long>(l))};
}

}  // namespace

void require_hurwitz_domain(const Rational& x, unsigned long p) {
  require_prime(p);
  long need = (p == 2) ? -2 : -1;
  if (x == 0 || vp(x, p) > need)
    throw DomainError("Hurwitz argument x = " + to_string(x) + " needs |x|_p >= q_p (nu_p(x) <= " +
                      std::to_string(need) + ")");
}

PadicApprox twisted_zeta(long i, const Rational& x, unsigned long p, long N) {
  if (i == 1) throw DomainError("zeta_p: s = 1 is a pole");
  require_hurwitz_domain(x, p);
  if (i <= 0) {
    unsigned long n = static_cast<unsigned long>(1 - i);
    return PadicApprox::from_rational(-bernoulli_poly(n)(x) / Rational(n), p, N);
  }
  long shift = vp(Integer(i - 1), p);
  Integrand f(FactoredTerm::pole(x, static_cast<unsigned long>(i - 1)));
  return integral_mahler(f, p, N + shift).scaled(Rational(1, i - 1)).reduced(N);
}

ZetaPos zeta_p_pos(long s, const Rational& x, unsigned long p, long N) {
  if (s < 2) throw DomainError("zeta_p_pos: s must be at least 2");
  require_hurwitz_domain(x, p);
  long v = vp(x, p);
  long Nt = N - v * (s - 1);
  ZetaPos out;
  long shift = vp(Integer(s - 1), p);
  Integrand f(FactoredTerm::pole(x, static_cast<unsigned long>(s - 1)));
  out.twisted = integral_mahler(f, p, Nt + shift, &out.stats).scaled(Rational(1, s - 1)).reduced(Nt);
  PadicApprox w = teichmuller_ext(x, p, Nt + 1).pow(s - 1);
  out.value = (out.twisted * w).reduced(N);
  return out;
}

ZetaNonpos zeta_p_nonpos(long one_minus_n, const Rational& x, unsigned long p, long N) {
  if (one_minus_n > 0) throw DomainError("zeta_p_nonpos: argument must be <= 0");
  if (x == 0) throw DomainError("zeta_p_nonpos: x must be nonzero");
  require_prime(p);
  long n = 1 - one_minus_n;
  ZetaNonpos out;
  out.bernoulli_part = -bernoulli_poly(static_cast<unsigned long>(n))(x) / Rational(n);
  long v = vp(x, p);
  long b = (out.bernoulli_part == 0) ? 0 : vp(out.bernoulli_part, p);
  // omega(x)^{-n} has valuation -n v; aim for absolute precision N in the product.
  long rel = std::max(1L, N + n * v - b);
  out.omega_part = teichmuller_ext(x, p, rel).pow(-n);
  if (out.bernoulli_part == 0) {
    out.value = PadicApprox::zero(p, N);
  } else {
    out.value = out.omega_part.scaled(out.bernoulli_part).reduced(N);
  }
  return out;
}

PadicApprox zeta_p(long i, const Rational& x, unsigned long p, long N) {
  if (i == 1) throw DomainError("zeta_p: s = 1 is a pole");
  if (i >= 2) return zeta_p_pos(i, x, p, N).value;
  return zeta_p_nonpos(i, x, p, N).value;
}

namespace {

// -<x>^{1-i}/x = -omega(x)^{i-1} / x^i, of valuation -nu_p(x)
PadicApprox shift_term(long i, const Rational& x, unsigned long p, long N) {
  long v = vp(x, p);
  long rel = std::max(1L, N + v + 1);
  return teichmuller_ext(x, p, rel).pow(i - 1).scaled(-pow_rational(x, -i)).reduced(N);
}

}  // namespace

ShiftReport zeta_p_shift(long i, const Rational& x, unsigned long p, long N) {
  if (i == 1) throw DomainError("zeta_p_shift: i = 1 is a pole");
  require_hurwitz_domain(x, p);
  PadicApprox lhs = zeta_p(i, x + 1, p, N) - zeta_p(i, x, p, N);
  PadicApprox rhs = shift_term(i, x, p, N);
  return {lhs, rhs, agreement(lhs, rhs)};
}

ShiftReduction zeta_p_reduce(long i, const Rational& x, unsigned long p, long N) {
  if (i == 1) throw DomainError("zeta_p_reduce: i = 1 is a pole");
  require_hurwitz_domain(x, p);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  ShiftReduction out;
  out.steps = Integer(c - 1).get_si();
  out.reduced = x - Rational(out.steps);
  out.correction = PadicApprox::zero(p, N);
  if (out.steps >= 0) {
    for (long t = 0; t < out.steps; ++t) out.correction += shift_term(i, out.reduced + t, p, N);
  } else {
    for (long t = 1; t <= -out.steps; ++t) out.correction -= shift_term(i, out.reduced - t, p, N);
  }
  out.value = zeta_p(i, out.reduced, p, N) + out.correction;
  return out;
}

long minimal_level(const DirichletCharacter& chi, unsigned long p) {
  require_prime(p);
  unsigned long d = chi.modulus();
  long l0 = 0;
  while (d % p == 0) d /= p, ++l0;
  long l = std::max(1L, l0);
  if (p == 2) l = std::max(2L, l);
  return l;
}

PadicApprox lp_value(long i, const DirichletCharacter& chi, long omega_exponent, unsigned long p, long l,
                     const PadicEmbedding& e, long N) {
  if (i == 1) throw DomainError("lp_value: i = 1 is a pole");
  if (e.prime() != p) throw DomainError("lp_value: embedding is for a different prime");
  Level lv = level_data(chi, p, l);
  // L_p(i, chi omega^e) = D^{-i} sum_j chi(j) omega(j)^{e+i-1} omega(j/D)^{1-i} zeta_p(i, j/D)
  const long k = mod_pos(omega_exponent + i - 1, static_cast<long>(teichmuller_order(p)));
  const long Nw = N + i * l + 1;  // D^{-i} costs i*l digits when i > 0
  const long work = std::max(Nw, N + 1);
  PadicApprox acc = PadicApprox::zero(p, work);
  for (Integer j = 1; j <= lv.D; ++j) {
    if (j % p == 0) continue;
    if (!chi.exponent(j)) continue;
    PadicApprox z = twisted_zeta(i, make_rational(j, lv.D), p, work);
    // The unit factor needs extra digits when z has negative valuation.
    const long cw = work - std::min(0L, z.valuation_bound());
    PadicApprox c = chi.padic_value(j, e, cw);
    if (k != 0) c *= teichmuller(Rational(j), p, cw).pow(k);
    acc += c * z;
  }
  Rational Dpow = pow_rational(Rational(lv.D), -i);
  return acc.scaled(Dpow).reduced(N);
}

std::optional<CyclotomicElement> lp_value_exact(long i, const DirichletCharacter& chi, long omega_exponent,
                                                unsigned long p, long l) {
  if (i > 0) return std::nullopt;
  const long k = mod_pos(omega_exponent + i - 1, static_cast<long>(teichmuller_order(p)));
  if (k != 0) return std::nullopt;
  Level lv = level_data(chi, p, l);
  const unsigned long n = static_cast<unsigned long>(1 - i);
  const Polynomial bn = bernoulli_poly(n);
  std::vector<Rational> by_exponent(chi.order(), 0);
  for (Integer j = 1; j <= lv.D; ++j) {
    if (j % p == 0) continue;
    auto ex = chi.exponent(j);
    if (ex) by_exponent[static_cast<std::size_t>(*ex)] += -bn(make_rational(j, lv.D)) / Rational(n);
  }
  CyclotomicElement acc(chi.order());
  for (std::size_t ex = 0; ex < by_exponent.size(); ++ex)
    if (by_exponent[ex] != 0)
      acc += CyclotomicElement::root_power(static_cast<long>(ex), chi.order()) * by_exponent[ex];
  return acc * pow_rational(Rational(lv.D), -i);
}

CyclotomicElement lp_interpolation_value(long i, const DirichletCharacter& chi, unsigned long p) {
  if (i > 0) throw DomainError("lp_interpolation_value: i must be <= 0");
  require_prime(p);
  const unsigned long n = static_cast<unsigned long>(1 - i);
  CyclotomicElement euler = CyclotomicElement::from_rational(1, chi.order()) -
                            chi.value(Integer(p)) * Rational(pow_p(p, n - 1));
  return euler * gen_bernoulli(n, chi) * Rational(-1, static_cast<long>(n));
}

}  // namespace padicl
