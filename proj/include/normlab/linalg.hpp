#pragma once

// Exact linear algebra over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "normlab/numeric.hpp"

namespace normlab {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Incrementally maintained reduced row echelon basis of a subspace of Q^n.
/// Every pivot entry is 1 and every pivot column is zero in all other rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols = 0) : ncols_(ncols), row_of_pivot_(ncols, npos) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == ncols_; }

  /// Adds v to the span. Returns false if v was already in it.
  bool insert(RationalVector v);
  /// Reduces v against the basis; the result is zero iff v lies in the span.
  RationalVector reduce(RationalVector v) const;
  bool contains(const RationalVector& v) const;

  /// Rows sorted by pivot column (the canonical RREF).
  RationalMatrix rows() const;
  std::vector<std::size_t> pivots() const;
  /// Column index of the pivot, or npos.
  std::size_t row_of_pivot(std::size_t col) const { return row_of_pivot_[col]; }
  const RationalVector& row(std::size_t r) const { return rows_[r]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t ncols_;
  RationalMatrix rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::size_t> row_of_pivot_;
};

std::size_t rank(const RationalMatrix& m, std::size_t ncols);

/// Basis of { x : m x = 0 }.
RationalMatrix null_space(const RationalMatrix& m, std::size_t ncols);

/// Unique solution of the square system a x = b, or nullopt when singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

}  // namespace normlab
