#pragma once

#include "padicl/characters.hpp"
#include "padicl/volkenborn.hpp"

#include <optional>

namespace padicl {

/// DomainError unless |x|_p >= q_p.
void require_hurwitz_domain(const Rational& x, unsigned long p);

/// omega(x)^{1-i} zeta_p(i, x): the exact -B_n(x)/n for i = 1 - n <= 0, the
/// Volkenborn integral (1/(i-1)) int (x+t)^{1-i} dt for i >= 2.
PadicApprox twisted_zeta(long i, const Rational& x, unsigned long p, long N);

struct ZetaPos {
  PadicApprox twisted;  ///< omega(x)^{1-s} zeta_p(s, x)
  PadicApprox value;    ///< zeta_p(s, x), precision N
  MahlerStats stats;
};
ZetaPos zeta_p_pos(long s, const Rational& x, unsigned long p, long N);

struct ZetaNonpos {
  Rational bernoulli_part;  ///< -B_n(x)/n
  PadicApprox omega_part;   ///< omega(x)^{-n}
  PadicApprox value;
};
ZetaNonpos zeta_p_nonpos(long one_minus_n, const Rational& x, unsigned long p, long N);

/// zeta_p(i, x) for i != 1 at absolute precision N.
PadicApprox zeta_p(long i, const Rational& x, unsigned long p, long N);

struct ShiftReport {
  PadicApprox lhs;  ///< zeta_p(i, x+1) - zeta_p(i, x)
  PadicApprox rhs;  ///< -<x>^{1-i} / x
  long agreement;
};
ShiftReport zeta_p_shift(long i, const Rational& x, unsigned long p, long N);

/// zeta_p(i, x) from zeta_p(i, x') with x' = x - steps in (0, 1], accumulating shift terms.
struct ShiftReduction {
  Rational reduced;
  long steps = 0;
  PadicApprox correction;
  PadicApprox value;
};
ShiftReduction zeta_p_reduce(long i, const Rational& x, unsigned long p, long N);

/// Smallest admissible l: max(1, l0), and at least 2 for p = 2.
long minimal_level(const DirichletCharacter& chi, unsigned long p);

/// L_p(i, chi omega^e) through the Hurwitz decomposition with D = d' p^l.
PadicApprox lp_value(long i, const DirichletCharacter& chi, long omega_exponent, unsigned long p, long l,
                     const PadicEmbedding& e, long N);

/// Exact value when every omega factor cancels (i <= 0 and e = 1 - i modulo phi(q_p)).
std::optional<CyclotomicElement> lp_value_exact(long i, const DirichletCharacter& chi, long omega_exponent,
                                                unsigned long p, long l);

/// (1 - chi(p) p^{-i}) (-B_{1-i,chi}/(1-i)) for i <= 0.
CyclotomicElement lp_interpolation_value(long i, const DirichletCharacter& chi, unsigned long p);

}  // namespace padicl
