#include "padicl/arith.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace padicl {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw DomainError("p must be prime, got " + std::to_string(p));
}

Integer pow_p(unsigned long p, unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

long vp(const Integer& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  Integer pz = p;
  return static_cast<long>(mpz_remove(Integer().get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long vp(const Rational& x, unsigned long p) {
  if (x == 0) return kInfiniteValuation;
  return vp(x.get_num(), p) - vp(x.get_den(), p);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(const Integer& m, unsigned long n) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long m, unsigned long n) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), m, n);
  return r;
}

long vp_factorial(unsigned long n, unsigned long p) {
  long v = 0;
  while (n > 0) {
    n /= p;
    v += static_cast<long>(n);
  }
  return v;
}

Integer lcm_upto(unsigned long n) {
  if (n < 1) throw DomainError("lcm_upto needs n >= 1");
  Integer r = 1;
  for (unsigned long k = 2; k <= n; ++k) {
    Integer kk = k;
    mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), kk.get_mpz_t());
  }
  return r;
}

Integer multinomial_packed(unsigned long m, unsigned long n) {
  if (n < 1) throw DomainError("multinomial_packed needs n >= 1");
  const unsigned long q = m / n;
  Integer den = 1;
  Integer nf = factorial(n);
  for (unsigned long i = 0; i < q; ++i) den *= nf;
  den *= factorial(m - n * q);
  Integer num = factorial(m);
  Integer r = num / den;
  if (r * den != num) throw InvariantError("multinomial_packed: inexact division");
  return r;
}

std::vector<unsigned long> digits(const Integer& k, unsigned long p) {
  if (k < 0) throw DomainError("digits: negative argument");
  std::vector<unsigned long> out;
  Integer x = k;
  Integer pz = p;
  while (x > 0) {
    Integer r;
    mpz_fdiv_qr(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
    out.push_back(r.get_ui());
  }
  return out;
}

long floor_log(const Integer& n, unsigned long p) {
  if (n < 1) throw DomainError("floor_log needs n >= 1");
  return static_cast<long>(digits(n, p).size()) - 1;
}

BinomPadicData binom_padic_data(const Integer& m, const Integer& n, unsigned long p) {
  if (n < 0 || n > m) throw DomainError("binom_padic_data needs 0 <= n <= m");
  auto dm = digits(m, p);
  auto dn = digits(n, p);
  auto dk = digits(Integer(m - n), p);
  dn.resize(dm.size(), 0);
  dk.resize(dm.size(), 0);
  long carries = 0;
  unsigned long carry = 0;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    unsigned long s = dn[i] + dk[i] + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<long>(carry);
  }
  unsigned long residue = 1;
  for (std::size_t i = 0; i < dm.size() && residue != 0; ++i) {
    if (dn[i] > dm[i]) {
      residue = 0;
      break;
    }
    residue = (residue * Integer(binomial(dm[i], dn[i]) % p).get_ui()) % p;
  }
  return {carries, residue};
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    Integer z;
    if (t.empty() || z.set_str(t, 10) != 0) throw DomainError("malformed integer literal '" + t + "'");
    return z;
  };
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(parse_int(s));
  } else {
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    q = Rational(parse_int(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

unsigned long multiplicative_order_mod(unsigned long a, unsigned long p) {
  a %= p;
  if (a == 0) throw DomainError("multiplicative_order_mod: not a unit");
  unsigned long x = a, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

unsigned long smallest_root_of_unity_mod(unsigned long m, unsigned long p) {
  if (p == 2) {
    if (m == 1) return 1;
    if (m == 2) return 3;  // -1 lives in Z_2 but is 1 mod 2; represented by 3 mod 4
    throw DomainError("only m | 2 is available for p = 2");
  }
  if ((p - 1) % m != 0) throw DomainError("m must divide p-1");
  for (unsigned long a = 1; a < p; ++a)
    if (multiplicative_order_mod(a, p) == m) return a;
  throw InvariantError("no root of unity found");
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      r -= r / q;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace padicl
