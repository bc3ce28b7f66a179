#include "padicl/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace padicl {

const Polynomial& cyclotomic_polynomial(unsigned long m) {
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<Polynomial>> cache;
  if (m == 0) throw DomainError("cyclotomic_polynomial: m must be positive");
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  std::vector<Rational> c(m + 1, 0);
  c[0] = -1;
  c[m] = 1;
  Polynomial poly(std::move(c));
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) poly = poly.divmod(cyclotomic_polynomial(d)).first;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(m, std::make_unique<Polynomial>(std::move(poly)));
  return *it->second;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  long da = a.degree(), db = b.degree();
  if (db == 0) {
    Rational r = 1;
    for (long i = 0; i < da; ++i) r *= b.leading();
    return r;
  }
  if (da == 0) {
    Rational r = 1;
    for (long i = 0; i < db; ++i) r *= a.leading();
    return r;
  }
  Polynomial rem = a.divmod(b).second;
  if (rem.is_zero()) return 0;
  Rational factor = ((da * db) % 2 == 0) ? Rational(1) : Rational(-1);
  for (long i = 0; i < da - rem.degree(); ++i) factor *= b.leading();
  return factor * resultant(b, rem);
}

CyclotomicElement::CyclotomicElement(unsigned long m) : m_(m), coords_(euler_phi(m), 0) {
  if (m == 0) throw DomainError("CyclotomicElement: order must be positive");
}

CyclotomicElement::CyclotomicElement(unsigned long m, std::vector<Rational> coords)
    : m_(m), coords_(std::move(coords)) {
  if (m == 0) throw DomainError("CyclotomicElement: order must be positive");
  if (coords_.size() != euler_phi(m))
    throw DomainError("CyclotomicElement: expected phi(m) = " + std::to_string(euler_phi(m)) + " coordinates");
}

CyclotomicElement CyclotomicElement::from_rational(const Rational& q, unsigned long m) {
  CyclotomicElement r(m);
  r.coords_[0] = q;
  return r;
}

CyclotomicElement CyclotomicElement::root_power(long k, unsigned long m) {
  long mm = static_cast<long>(m);
  long e = ((k % mm) + mm) % mm;
  std::vector<Rational> c(static_cast<std::size_t>(e + 1), 0);
  c[static_cast<std::size_t>(e)] = 1;
  return from_polynomial(Polynomial(std::move(c)), m);
}

Polynomial CyclotomicElement::as_polynomial() const { return Polynomial(coords_); }

CyclotomicElement CyclotomicElement::from_polynomial(const Polynomial& poly, unsigned long m) {
  Polynomial r = poly.divmod(cyclotomic_polynomial(m)).second;
  std::vector<Rational> c(euler_phi(m), 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return CyclotomicElement(m, std::move(c));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw DomainError("CyclotomicElement: value is not rational");
  return coords_[0];
}

Integer CyclotomicElement::denominator() const {
  Integer d = 1;
  for (const auto& c : coords_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  if (o.m_ != m_) return *this = lifted(std::lcm(m_, o.m_)) += o.lifted(std::lcm(m_, o.m_));
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  if (o.m_ != m_) return *this = lifted(std::lcm(m_, o.m_)) *= o.lifted(std::lcm(m_, o.m_));
  return *this = from_polynomial(as_polynomial() * o.as_polynomial(), m_);
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DomainError("CyclotomicElement: inverse of zero");
  // Extended Euclid: u * a + v * Phi = g, g a nonzero constant.
  Polynomial r0 = cyclotomic_polynomial(m_), r1 = as_polynomial();
  Polynomial s0, s1 = Polynomial::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    Polynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw InvariantError("CyclotomicElement: non-invertible element");
  return from_polynomial(s1 * Rational(1 / r1.coeff(0)), m_);
}

CyclotomicElement CyclotomicElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicElement result = from_rational(1, m_), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::lifted(unsigned long n) const {
  if (n % m_ != 0) throw DomainError("CyclotomicElement::lifted: order must divide target");
  if (n == m_) return *this;
  const unsigned long step = n / m_;
  std::vector<Rational> c((coords_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i * step] = coords_[i];
  return from_polynomial(Polynomial(std::move(c)), n);
}

Rational CyclotomicElement::norm() const {
  return resultant(cyclotomic_polynomial(m_), as_polynomial());
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  if (m_ != o.m_) {
    unsigned long n = std::lcm(m_, o.m_);
    return lifted(n) == o.lifted(n);
  }
  return coords_ == o.coords_;
}

std::string CyclotomicElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += padicl::to_string(coords_[i]);
    if (i > 0) out += "*z" + std::to_string(m_) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
CyclotomicElement operator*(CyclotomicElement a, const Rational& q) { return a *= q; }

Rational cyclo_norm(const CyclotomicElement& x) { return x.norm(); }

bool embeddable(unsigned long m, unsigned long p) {
  if (p == 2) return m == 1 || m == 2;
  return (p - 1) % m == 0;
}

PadicEmbedding::PadicEmbedding(unsigned long p, unsigned long m)
    : PadicEmbedding(p, m, embeddable(m, p) ? smallest_root_of_unity_mod(m, p) : 0) {}

PadicEmbedding::PadicEmbedding(unsigned long p, unsigned long m, unsigned long residue)
    : p_(p), m_(m), residue_(residue) {
  require_prime(p);
  if (!embeddable(m, p))
    throw DomainError("embedding of Q(zeta_" + std::to_string(m) + ") into Q_" + std::to_string(p) +
                      " needs m | p-1 (m | 2 for p = 2)");
  if (p == 2) {
    unsigned long want = (m == 1) ? 1 : 3;
    if (residue % 4 != want) throw DomainError("p = 2 embedding residue must be 1 (m=1) or 3 (m=2) mod 4");
  } else if (residue % p == 0 || multiplicative_order_mod(residue, p) != m) {
    throw DomainError("embedding residue is not of exact order m mod p");
  }
}

PadicApprox PadicEmbedding::root_image(long N) const { return teichmuller(Rational(residue_), p_, N); }

PadicApprox cyclo_embed(const CyclotomicElement& x, const PadicEmbedding& e, long N) {
  if (e.order() % x.order() != 0)
    throw DomainError("cyclo_embed: element order " + std::to_string(x.order()) +
                      " does not divide embedding order " + std::to_string(e.order()));
  CyclotomicElement y = x.lifted(e.order());
  // Coordinates may carry p in their denominators; work with enough relative digits.
  long shift = 0;
  for (const auto& c : y.coords())
    if (c != 0) shift = std::max(shift, -vp(c, e.prime()));
  long work = N + shift + 1;
  PadicApprox root = e.root_image(std::max(work, 1L));
  PadicApprox acc = PadicApprox::zero(e.prime(), N);
  PadicApprox power = PadicApprox::from_rational(1, e.prime(), std::max(work, 1L));
  for (std::size_t i = 0; i < y.coords().size(); ++i) {
    if (y.coords()[i] != 0) acc += power.scaled(y.coords()[i]);
    power *= root;
  }
  return acc.reduced(N);
}

}  // namespace padicl
