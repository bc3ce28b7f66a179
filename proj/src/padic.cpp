#include "padicl/padic.hpp"

#include <algorithm>

namespace padicl {

namespace {

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvariantError("mod_inverse: not invertible");
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

PadicApprox PadicApprox::zero(unsigned long p, long precision) {
  PadicApprox z;
  z.p_ = p;
  z.prec_ = precision;
  z.zero_ = true;
  return z;
}

void PadicApprox::normalize_from(const Integer& value, long base_valuation, long precision) {
  prec_ = precision;
  if (precision <= base_valuation) {
    zero_ = true;
    unit_ = 0;
    return;
  }
  Integer m = mod(value, pow_p(p_, static_cast<unsigned long>(precision - base_valuation)));
  if (m == 0) {
    zero_ = true;
    unit_ = 0;
    return;
  }
  Integer pz = p_;
  long extra = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
  zero_ = false;
  val_ = base_valuation + extra;
  unit_ = m;
}

PadicApprox PadicApprox::from_parts(unsigned long p, long valuation, const Integer& unit,
                                    long relative_precision) {
  PadicApprox r;
  r.p_ = p;
  r.normalize_from(unit, valuation, valuation + relative_precision);
  return r;
}

PadicApprox PadicApprox::from_rational(const Rational& x, unsigned long p, long precision) {
  PadicApprox r;
  r.p_ = p;
  r.prec_ = precision;
  if (x == 0) return zero(p, precision);
  long v = vp(x, p);
  if (v >= precision) return zero(p, precision);
  Integer pz = p;
  Integer num = x.get_num(), den = x.get_den();
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  Integer modulus = pow_p(p, static_cast<unsigned long>(precision - v));
  r.zero_ = false;
  r.val_ = v;
  r.unit_ = mod(num * mod_inverse(den, modulus), modulus);
  return r;
}

Rational PadicApprox::to_rational() const {
  if (zero_) return 0;
  Rational r(unit_);
  if (val_ >= 0) {
    r *= Rational(pow_p(p_, static_cast<unsigned long>(val_)));
  } else {
    r /= Rational(pow_p(p_, static_cast<unsigned long>(-val_)));
  }
  return r;
}

PadicApprox PadicApprox::reduced(long precision) const {
  if (precision >= prec_) return *this;
  if (zero_ || precision <= val_) return zero(p_, precision);
  PadicApprox r = *this;
  r.prec_ = precision;
  r.unit_ = mod(unit_, pow_p(p_, static_cast<unsigned long>(precision - val_)));
  return r;
}

PadicApprox PadicApprox::operator-() const {
  if (zero_) return *this;
  PadicApprox r = *this;
  Integer modulus = pow_p(p_, static_cast<unsigned long>(prec_ - val_));
  r.unit_ = modulus - unit_;
  return r;
}

PadicApprox& PadicApprox::operator+=(const PadicApprox& o) {
  if (o.p_ != p_) throw DomainError("PadicApprox: mismatched primes");
  long prec = std::min(prec_, o.prec_);
  if (o.zero_) return *this = reduced(prec);
  if (zero_) return *this = o.reduced(prec);
  long m = std::min(val_, o.val_);
  if (prec <= m) return *this = zero(p_, prec);
  Integer a = unit_ * pow_p(p_, static_cast<unsigned long>(val_ - m));
  Integer b = o.unit_ * pow_p(p_, static_cast<unsigned long>(o.val_ - m));
  normalize_from(a + b, m, prec);
  return *this;
}

PadicApprox& PadicApprox::operator-=(const PadicApprox& o) { return *this += -o; }

PadicApprox& PadicApprox::operator*=(const PadicApprox& o) {
  if (o.p_ != p_) throw DomainError("PadicApprox: mismatched primes");
  if (zero_ || o.zero_) {
    long prec = std::min(prec_ + o.valuation_bound(), o.prec_ + valuation_bound());
    return *this = zero(p_, prec);
  }
  long rel = std::min(prec_ - val_, o.prec_ - o.val_);
  long v = val_ + o.val_;
  Integer modulus = pow_p(p_, static_cast<unsigned long>(rel));
  unit_ = mod(unit_ * o.unit_, modulus);
  val_ = v;
  prec_ = v + rel;
  return *this;
}

PadicApprox& PadicApprox::operator/=(const PadicApprox& o) {
  if (o.p_ != p_) throw DomainError("PadicApprox: mismatched primes");
  if (o.zero_) throw PrecisionError("PadicApprox: division by an element that is zero at its precision");
  if (zero_) return *this = zero(p_, prec_ - o.val_);
  long rel = std::min(prec_ - val_, o.prec_ - o.val_);
  Integer modulus = pow_p(p_, static_cast<unsigned long>(rel));
  unit_ = mod(unit_ * mod_inverse(o.unit_, modulus), modulus);
  val_ -= o.val_;
  prec_ = val_ + rel;
  return *this;
}

PadicApprox PadicApprox::scaled(const Rational& q) const {
  if (q == 0) return zero(p_, kInfiniteValuation / 4);
  long vq = vp(q, p_);
  if (zero_) return zero(p_, prec_ + vq);
  PadicApprox qa = from_rational(q, p_, vq + relative_precision());
  return *this * qa;
}

PadicApprox PadicApprox::pow(long k) const {
  if (k == 0) {
    long rel = zero_ ? 1 : relative_precision();
    return from_rational(1, p_, std::max(rel, 1L));
  }
  if (k < 0) {
    PadicApprox one = from_rational(1, p_, relative_precision());
    return one / pow(-k);
  }
  if (zero_) return zero(p_, prec_ * k);
  long rel = relative_precision();
  Integer modulus = pow_p(p_, static_cast<unsigned long>(rel));
  Integer u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(k), modulus.get_mpz_t());
  PadicApprox r;
  r.p_ = p_;
  r.zero_ = false;
  r.val_ = val_ * k;
  r.prec_ = r.val_ + rel;
  r.unit_ = u;
  return r;
}

std::string PadicApprox::to_string() const {
  if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  return padicl::to_string(to_rational()) + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

PadicApprox operator+(PadicApprox a, const PadicApprox& b) { return a += b; }
PadicApprox operator-(PadicApprox a, const PadicApprox& b) { return a -= b; }
PadicApprox operator*(PadicApprox a, const PadicApprox& b) { return a *= b; }
PadicApprox operator/(PadicApprox a, const PadicApprox& b) { return a /= b; }

long agreement(const PadicApprox& a, const PadicApprox& b) {
  PadicApprox d = a - b;
  return d.is_zero() ? d.precision() : d.valuation();
}

bool congruent(const PadicApprox& a, const PadicApprox& b, long N) {
  if (N > a.precision() || N > b.precision())
    throw PrecisionError("congruent: modulus exceeds available precision");
  return agreement(a, b) >= N;
}

unsigned long q_p(unsigned long p) { return p == 2 ? 4 : p; }

unsigned long teichmuller_order(unsigned long p) { return p == 2 ? 2 : p - 1; }

PadicApprox teichmuller(const Rational& x, unsigned long p, long N) {
  if (x == 0 || vp(x, p) != 0) throw DomainError("teichmuller: argument must be a p-adic unit");
  if (N < 1) throw DomainError("teichmuller: precision must be positive");
  PadicApprox ux = PadicApprox::from_rational(x, p, N);
  if (p == 2) {
    // mu_{phi(4)} = {+1, -1}; omega(x) = +-1 according to x mod 4.
    long sign = (ux.unit() % 4 == 1) ? 1 : -1;
    return PadicApprox::from_rational(sign, 2, N);
  }
  Integer modulus = pow_p(p, static_cast<unsigned long>(N));
  Integer y = ux.unit();
  for (;;) {
    Integer next;
    mpz_powm_ui(next.get_mpz_t(), y.get_mpz_t(), p, modulus.get_mpz_t());
    if (next == y) break;
    y = next;
  }
  return PadicApprox::from_parts(p, 0, y, N);
}

PadicApprox teichmuller_ext(const Rational& x, unsigned long p, long N) {
  if (x == 0) throw DomainError("teichmuller_ext: zero argument");
  long v = vp(x, p);
  Rational u = x;
  if (v > 0) u /= Rational(pow_p(p, static_cast<unsigned long>(v)));
  if (v < 0) u *= Rational(pow_p(p, static_cast<unsigned long>(-v)));
  PadicApprox w = teichmuller(u, p, N);
  return PadicApprox::from_parts(p, v, w.unit(), N);
}

PadicApprox angle(const Rational& x, unsigned long p, long N) {
  PadicApprox w = teichmuller_ext(x, p, N);
  long v = vp(x, p);
  return PadicApprox::from_rational(x, p, v + N) / w;
}

}  // namespace padicl
