#pragma once

#include "padicl/polynomial.hpp"

namespace padicl {

/// B_n with the convention B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli_number(unsigned long n);

/// B_n(x) = sum_k binom(n,k) B_k x^{n-k}.
Polynomial bernoulli_poly(unsigned long n);

}  // namespace padicl
