#include "padicl/heights.hpp"

#include "padicl/characters.hpp"

#include <algorithm>

namespace padicl {

HeightMatrix::HeightMatrix(unsigned long m, std::vector<std::vector<CyclotomicElement>> rows)
    : m_(m), a_(std::move(rows)) {
  if (a_.empty()) throw DomainError("height matrix needs at least one row");
  const std::size_t w = a_[0].size();
  if (w == 0) throw DomainError("height matrix needs at least one column");
  if (w > kHeightWidthCap)
    throw DomainError("height matrix width " + std::to_string(w) + " exceeds the cap " +
                      std::to_string(kHeightWidthCap));
  if (a_.size() > w) throw DomainError("height matrix needs s <= r (rows <= columns)");
  for (auto& row : a_) {
    if (row.size() != w) throw DomainError("height matrix rows differ in length");
    for (auto& x : row) {
      if (m_ % x.order() != 0) throw DomainError("entry field does not embed in Q(zeta_m)");
      x = x.lifted(m_);
    }
  }
}

HeightMatrix HeightMatrix::from_rationals(const std::vector<std::vector<Rational>>& rows, unsigned long m) {
  std::vector<std::vector<CyclotomicElement>> a;
  for (const auto& row : rows) {
    std::vector<CyclotomicElement> r;
    for (const auto& q : row) r.push_back(CyclotomicElement::from_rational(q, m));
    a.push_back(std::move(r));
  }
  return HeightMatrix(m, std::move(a));
}

HeightMatrix HeightMatrix::with_row(const std::vector<CyclotomicElement>& row) const {
  auto a = a_;
  a.push_back(row);
  return HeightMatrix(m_, std::move(a));
}

HeightMatrix HeightMatrix::with_row(const HeightMatrix& single_row) const {
  if (single_row.rows() != 1) throw DomainError("with_row: expected a single row");
  return with_row(single_row.a_[0]);
}

HeightMatrix HeightMatrix::columns(const std::vector<std::size_t>& J) const {
  std::vector<std::vector<CyclotomicElement>> a;
  for (const auto& row : a_) {
    std::vector<CyclotomicElement> r;
    for (std::size_t j : J) r.push_back(row.at(j));
    a.push_back(std::move(r));
  }
  // A square selection may have fewer columns than rows only transiently; skip the shape check.
  HeightMatrix out = *this;
  out.a_ = std::move(a);
  return out;
}

HeightMatrix HeightMatrix::without_row(std::size_t i) const {
  HeightMatrix out = *this;
  out.a_.erase(out.a_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

CyclotomicElement determinant(const HeightMatrix& sq) {
  const std::size_t n = sq.rows();
  if (n == 0) return CyclotomicElement::from_rational(1, sq.field_order());
  if (sq.cols() != n) throw DomainError("determinant of a non-square matrix");
  std::vector<std::vector<CyclotomicElement>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(sq.at(i, j));
  CyclotomicElement det = CyclotomicElement::from_rational(1, sq.field_order());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return CyclotomicElement(sq.field_order());
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    CyclotomicElement inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      CyclotomicElement f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Rational height_K(const HeightMatrix& M) {
  Rational best = 0;
  for (const auto& J : subsets(M.cols(), M.rows())) {
    Rational nm = abs(cyclo_norm(determinant(M.columns(J))));
    if (nm > best) best = nm;
  }
  return best;
}

long height_p_valuation(const HeightMatrix& M, const PadicEmbedding& e) {
  long best = kInfiniteValuation;
  for (const auto& J : subsets(M.cols(), M.rows())) {
    CyclotomicElement d = determinant(M.columns(J));
    if (d.is_zero()) continue;
    best = std::min(best, cyclo_valuation(d, e));
  }
  return best;
}

DeltaValuation delta_p_valuation(const HeightMatrix& M, const std::vector<PadicApprox>& xi, const PadicEmbedding& e) {
  if (xi.size() != M.cols()) throw DomainError("delta_p: xi must have r+1 entries");
  long N = kInfiniteValuation;
  for (const auto& x : xi) N = std::min(N, x.precision());
  // Entries are embedded with enough room that xi dominates the precision loss.
  long low = 0;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      for (const auto& c : M.at(i, j).coords())
        if (c != 0) low = std::min(low, vp(c, e.prime()));
  const long Ne = N - low * static_cast<long>(M.rows() + 1) + 8;

  std::vector<PadicApprox> Mxi;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    PadicApprox acc = PadicApprox::zero(e.prime(), Ne);
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero()) acc += cyclo_embed(M.at(i, j), e, Ne) * xi[j];
    Mxi.push_back(acc);
  }
  const std::size_t s = M.rows() - 1;
  DeltaValuation out{kInfiniteValuation, false};
  for (const auto& Jp : subsets(M.cols(), s)) {
    HeightMatrix sub = M.columns(Jp);
    // Expand det(M_{J'} | M xi) along the appended last column.
    PadicApprox det = PadicApprox::zero(e.prime(), Ne);
    for (std::size_t i = 0; i <= s; ++i) {
      CyclotomicElement minor = determinant(sub.without_row(i));
      if (minor.is_zero()) continue;
      PadicApprox term = Mxi[i] * cyclo_embed(minor, e, Ne);
      if ((i + s) % 2 == 0) det += term;
      else det -= term;
    }
    if (det.is_zero()) {
      if (!out.exact) out.valuation = std::min(out.valuation, det.precision());
    } else if (!out.exact || det.valuation() < out.valuation) {
      out.valuation = out.exact ? std::min(out.valuation, det.valuation()) : det.valuation();
      out.exact = true;
    }
  }
  return out;
}

}  // namespace padicl
