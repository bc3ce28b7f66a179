#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace padicl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero. Never do arithmetic on it; test with is_infinite().
inline constexpr long kInfiniteValuation = LONG_MAX;

inline bool is_infinite(long v) { return v == kInfiniteValuation; }

/// A violated precondition of a public operation (CLI maps it to exit code 3).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested precision could not be certified.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (denominator found where an integer was proven).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(unsigned long n);
void require_prime(unsigned long p);

Integer pow_p(unsigned long p, unsigned long k);

long vp(const Integer& x, unsigned long p);
long vp(const Rational& x, unsigned long p);

Integer factorial(unsigned long n);
Integer binomial(const Integer& m, unsigned long n);
Integer binomial(unsigned long m, unsigned long n);

/// Legendre: nu_p(n!).
long vp_factorial(unsigned long n, unsigned long p);

/// d_n = lcm(1, ..., n).
Integer lcm_upto(unsigned long n);

/// m! / (n!^{floor(m/n)} (m mod n)!).
Integer multinomial_packed(unsigned long m, unsigned long n);

struct BinomPadicData {
  long carry_count;
  unsigned long residue_mod_p;
};

/// Kummer carry count and Lucas residue of binom(m, n) without forming it.
BinomPadicData binom_padic_data(const Integer& m, const Integer& n, unsigned long p);

/// Base-p digits, least significant first; empty for 0.
std::vector<unsigned long> digits(const Integer& k, unsigned long p);

/// floor(log_p(n)) for n >= 1.
long floor_log(const Integer& n, unsigned long p);

/// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
Rational make_rational(const Integer& num, const Integer& den);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// Smallest positive integer whose class has multiplicative order exactly m mod p.
unsigned long smallest_root_of_unity_mod(unsigned long m, unsigned long p);
unsigned long multiplicative_order_mod(unsigned long a, unsigned long p);

unsigned long euler_phi(unsigned long n);

}  // namespace padicl
