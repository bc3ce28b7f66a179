#include "padicl/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace padicl {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& cache() {
  static std::vector<Rational> c{Rational(1)};
  return c;
}

}  // namespace

Rational bernoulli_number(unsigned long n) {
  {
    std::lock_guard lock(cache_mutex());
    if (n < cache().size()) return cache()[n];
  }
  // Recompute from the published prefix; a concurrent writer produces the same values.
  std::vector<Rational> b;
  {
    std::lock_guard lock(cache_mutex());
    b = cache();
  }
  for (unsigned long m = b.size(); m <= n; ++m) {
    // sum_{k=0}^{m} binom(m+1, k) B_k = 0
    Rational acc = 0;
    for (unsigned long k = 0; k < m; ++k) {
      if (k > 1 && (k & 1)) continue;
      acc += Rational(binomial(m + 1, k)) * b[k];
    }
    b.push_back(-acc / Rational(static_cast<unsigned long>(m + 1)));
  }
  std::lock_guard lock(cache_mutex());
  if (cache().size() < b.size()) cache() = b;
  return b[n];
}

Polynomial bernoulli_poly(unsigned long n) {
  std::vector<Rational> c(n + 1);
  for (unsigned long k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
  return Polynomial(std::move(c));
}

}  // namespace padicl
