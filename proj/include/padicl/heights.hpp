#pragma once

#include "padicl/cyclotomic.hpp"

#include <vector>

namespace padicl {

/// Widest matrix accepted by the minor enumeration.
inline constexpr std::size_t kHeightWidthCap = 8;

/// (s+1) x (r+1) matrix over Q(zeta_m) with s <= r.
class HeightMatrix {
 public:
  HeightMatrix(unsigned long m, std::vector<std::vector<CyclotomicElement>> rows);
  static HeightMatrix from_rationals(const std::vector<std::vector<Rational>>& rows, unsigned long m = 1);

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }
  unsigned long field_order() const { return m_; }
  const CyclotomicElement& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  /// M with L appended as its last row.
  HeightMatrix with_row(const std::vector<CyclotomicElement>& row) const;
  HeightMatrix with_row(const HeightMatrix& single_row) const;
  /// Columns J, in order.
  HeightMatrix columns(const std::vector<std::size_t>& J) const;
  /// Drop row i.
  HeightMatrix without_row(std::size_t i) const;

 private:
  unsigned long m_;
  std::vector<std::vector<CyclotomicElement>> a_;
};

CyclotomicElement determinant(const HeightMatrix& sq);

/// All subsets of {0..n-1} of size k, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// H_K(M) = max_J |N_K(det M_J)| with K = Q(zeta_m).
Rational height_K(const HeightMatrix& M);

/// -log_p H_p(M) = min_J nu_p(det M_J); kInfiniteValuation when every minor vanishes.
long height_p_valuation(const HeightMatrix& M, const PadicEmbedding& e);

/// -log_p Delta_p(M) = min_{J'} nu_p(det M_{J',xi}), with xi known to absolute precision.
/// A minor that is zero at precision contributes its precision as a lower bound;
/// `exact` reports whether the minimum was attained by a nonzero value.
struct DeltaValuation {
  long valuation;
  bool exact;
};
DeltaValuation delta_p_valuation(const HeightMatrix& M, const std::vector<PadicApprox>& xi, const PadicEmbedding& e);

}  // namespace padicl
