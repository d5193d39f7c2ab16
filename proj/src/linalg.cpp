#include "normlab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace normlab {

namespace {

std::size_t leading_index(const RationalVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// Full RREF of a dense matrix in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

RationalVector EchelonBasis::reduce(RationalVector v) const {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (v[c] == 0) continue;
    const std::size_t r = row_of_pivot_[c];
    if (r == npos) continue;
    const Rational f = v[c];
    const RationalVector& row = rows_[r];
    for (std::size_t j = 0; j < ncols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  const RationalVector red = reduce(v);
  return leading_index(red) == ncols_;
}

bool EchelonBasis::insert(RationalVector v) {
  v = reduce(std::move(v));
  const std::size_t lead = leading_index(v);
  if (lead == ncols_) return false;
  const Rational inv = 1 / v[lead];
  for (auto& x : v)
    if (x != 0) x *= inv;
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    if (row[lead] == 0) continue;
    const Rational f = row[lead];
    for (std::size_t j = 0; j < ncols_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  row_of_pivot_[lead] = rows_.size();
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

RationalMatrix EchelonBasis::rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  RationalMatrix out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

std::size_t rank(const RationalMatrix& m, std::size_t ncols) {
  RationalMatrix copy = m;
  return rref(copy, ncols).size();
}

RationalMatrix null_space(const RationalMatrix& m, std::size_t ncols) {
  RationalMatrix red = m;
  const std::vector<std::size_t> pivots = rref(red, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (n == 0) return RationalVector{};
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const std::vector<std::size_t> pivots = rref(a, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace normlab
