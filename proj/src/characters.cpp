#include "padicl/characters.hpp"

#include "padicl/bernoulli.hpp"

#include <json.hpp>

#include <numeric>

namespace padicl {

namespace {

long mod_pos(long a, long m) { return ((a % m) + m) % m; }

bool squarefree(unsigned long n) {
  for (unsigned long q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

bool fundamental_discriminant(long D) {
  if (D == 1 || D == 0) return false;
  long r = mod_pos(D, 4);
  if (r == 1) return squarefree(static_cast<unsigned long>(std::labs(D)));
  if (r != 0) return false;
  long m = D / 4;
  long rm = mod_pos(m, 4);
  return (rm == 2 || rm == 3) && squarefree(static_cast<unsigned long>(std::labs(m)));
}

}  // namespace

DirichletCharacter::DirichletCharacter(unsigned long modulus, unsigned long order,
                                       std::vector<std::optional<long>> exponents)
    : d_(modulus), m_(order), exps_(std::move(exponents)) {
  if (d_ == 0) throw DomainError("character: modulus must be positive");
  if (m_ == 0) throw DomainError("character: order must be positive");
  if (exps_.size() != d_)
    throw DomainError("character: value table must have exactly modulus = " + std::to_string(d_) + " entries");
  const long m = static_cast<long>(m_);
  for (unsigned long j = 0; j < d_; ++j) {
    bool unit = std::gcd(j, d_) == 1;
    if (unit != exps_[j].has_value())
      throw DomainError("character: value at " + std::to_string(j) +
                        (unit ? " must be a root of unity" : " must be 0 (not a unit)"));
    if (unit) exps_[j] = mod_pos(*exps_[j], m);
  }
  if (*exps_[1 % d_] != 0) throw DomainError("character: chi(1) must be 1");
  for (unsigned long a = 0; a < d_; ++a) {
    if (!exps_[a]) continue;
    for (unsigned long b = a; b < d_; ++b) {
      if (!exps_[b]) continue;
      if (*exps_[(a * b) % d_] != mod_pos(*exps_[a] + *exps_[b], m))
        throw DomainError("character: table is not multiplicative at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
  }
  long e_minus = *exps_[(d_ - 1) % d_];
  if (mod_pos(2 * e_minus, m) != 0) throw InvariantError("character: chi(-1) is not +-1");
  delta_ = (e_minus == 0) ? 0 : 1;
  for (unsigned long f = 1; f <= d_; ++f) {
    if (d_ % f != 0) continue;
    bool ok = true;
    for (unsigned long a = 1; a < d_ && ok; a += f)
      if (exps_[a] && *exps_[a] != 0) ok = false;
    if (ok) {
      conductor_ = f;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::trivial(unsigned long modulus) {
  if (modulus == 0) throw DomainError("character: modulus must be positive");
  std::vector<std::optional<long>> e(modulus);
  for (unsigned long j = 0; j < modulus; ++j)
    if (std::gcd(j, modulus) == 1) e[j] = 0;
  return DirichletCharacter(modulus, 1, std::move(e));
}

DirichletCharacter DirichletCharacter::quadratic(long D) {
  if (!fundamental_discriminant(D))
    throw DomainError("quadratic character: " + std::to_string(D) + " is not a fundamental discriminant");
  unsigned long d = static_cast<unsigned long>(std::labs(D));
  std::vector<std::optional<long>> e(d);
  for (unsigned long j = 0; j < d; ++j) {
    int k = mpz_si_kronecker(D, Integer(j).get_mpz_t());
    if (k == 1) e[j] = 0;
    if (k == -1) e[j] = 1;
  }
  return DirichletCharacter(d, 2, std::move(e));
}

DirichletCharacter DirichletCharacter::parse(const std::string& spec) {
  if (spec == "trivial") return trivial(1);
  if (spec.rfind("trivial:", 0) == 0) return trivial(std::stoul(spec.substr(8)));
  if (spec.rfind("quadratic:", 0) == 0) {
    std::string arg = spec.substr(10);
    long v = std::stol(arg);
    if (arg.front() == '-' || arg.front() == '+') return quadratic(v);
    // Unsigned modulus: pick the sign giving a fundamental discriminant, positive first.
    if (fundamental_discriminant(v)) return quadratic(v);
    return quadratic(-v);
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(spec);
  } catch (const nlohmann::json::exception&) {
    throw DomainError("character spec is neither a built-in nor valid JSON: " + spec);
  }
  if (!j.is_object() || !j.contains("modulus") || !j.contains("values"))
    throw DomainError("character JSON needs \"modulus\" and \"values\"");
  unsigned long d = j.at("modulus").get<unsigned long>();
  const auto& vals = j.at("values");
  if (!vals.is_array()) throw DomainError("character JSON: \"values\" must be an array");
  std::vector<std::optional<long>> e(vals.size());
  if (j.contains("order")) {
    unsigned long m = j.at("order").get<unsigned long>();
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (!vals[i].is_null()) e[i] = vals[i].get<long>();
    return DirichletCharacter(d, m, std::move(e));
  }
  bool any_minus = false;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    long v = vals[i].get<long>();
    if (v == 1) e[i] = 0;
    else if (v == -1) e[i] = 1, any_minus = true;
    else if (v != 0) throw DomainError("character JSON without \"order\": values must be -1, 0 or 1");
  }
  return DirichletCharacter(d, any_minus ? 2 : 1, std::move(e));
}

std::optional<long> DirichletCharacter::exponent(const Integer& j) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), j.get_mpz_t(), d_);
  return exps_[r.get_ui()];
}

CyclotomicElement DirichletCharacter::value(const Integer& j) const {
  auto e = exponent(j);
  if (!e) return CyclotomicElement(m_);
  return CyclotomicElement::root_power(*e, m_);
}

long DirichletCharacter::rational_value(const Integer& j) const {
  if (!is_rational()) throw DomainError("character has irrational values");
  auto e = exponent(j);
  if (!e) return 0;
  return *e == 0 ? 1 : -1;
}

PadicApprox DirichletCharacter::padic_value(const Integer& j, const PadicEmbedding& e, long N) const {
  auto k = exponent(j);
  if (!k) return PadicApprox::zero(e.prime(), N);
  if (is_rational()) return PadicApprox::from_rational(*k == 0 ? 1 : -1, e.prime(), N);
  return cyclo_embed(CyclotomicElement::root_power(*k, m_), e, N);
}

std::string DirichletCharacter::to_json() const {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& e : exps_) vals.push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
  nlohmann::json j;
  j["modulus"] = d_;
  j["order"] = m_;
  j["values"] = vals;
  return j.dump();
}

CyclotomicElement gen_bernoulli(unsigned long k, const DirichletCharacter& chi) {
  if (k == 0) throw DomainError("gen_bernoulli: k must be at least 1");
  const unsigned long d = chi.modulus(), m = chi.order();
  const Polynomial bk = bernoulli_poly(k);
  std::vector<Rational> by_exponent(m, 0);
  for (unsigned long a = 1; a <= d; ++a) {
    auto e = chi.exponent(Integer(a));
    if (e) by_exponent[static_cast<std::size_t>(*e)] += bk(make_rational(a, d));
  }
  Rational scale = Rational(pow_p(d, k - 1));
  CyclotomicElement acc(m);
  for (unsigned long e = 0; e < m; ++e)
    if (by_exponent[e] != 0) acc += CyclotomicElement::root_power(static_cast<long>(e), m) * by_exponent[e];
  return acc * scale;
}

long cyclo_valuation(const CyclotomicElement& x, const PadicEmbedding& e) {
  if (x.is_zero()) return kInfiniteValuation;
  if (x.is_rational()) return vp(x.rational_value(), e.prime());
  long low = 0;
  for (const auto& c : x.coords())
    if (c != 0) low = std::min(low, vp(c, e.prime()));
  // The embedding is injective, so some finite precision shows a nonzero image.
  for (long extra = 16;; extra *= 2) {
    PadicApprox y = cyclo_embed(x, e, low + extra);
    if (!y.is_zero()) return y.valuation();
  }
}

PadicEmbedding default_embedding(const DirichletCharacter& chi, unsigned long p) {
  if (!embeddable(chi.order(), p))
    throw DomainError("character values in Q(zeta_" + std::to_string(chi.order()) + ") do not embed in Q_" +
                      std::to_string(p));
  return PadicEmbedding(p, chi.order());
}

ChiPadicData chi_padic_data(const DirichletCharacter& chi, unsigned long p) {
  require_prime(p);
  return chi_padic_data(chi, p, default_embedding(chi, p));
}

ChiPadicData chi_padic_data(const DirichletCharacter& chi, unsigned long p, const PadicEmbedding& e) {
  require_prime(p);
  ChiPadicData out{};
  unsigned long d = chi.modulus();
  out.l0 = 0;
  while (d % p == 0) {
    d /= p;
    ++out.l0;
  }
  out.d_prime = d;
  out.delta = chi.delta();
  out.b_head = gen_bernoulli(static_cast<unsigned long>(2 + out.delta), chi);
  out.b_head_valuation = cyclo_valuation(out.b_head, e);
  if (is_infinite(out.b_head_valuation)) throw InvariantError("chi_padic_data: B_{2+delta,chi} vanishes");
  out.r = out.b_head_valuation + 1;
  return out;
}

}  // namespace padicl
