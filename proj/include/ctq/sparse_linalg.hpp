#pragma once

#include "ctq/matrix.hpp"
#include "ctq/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ctq {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
template <typename T> using SparseRow = std::vector<std::pair<int, T>>;

/// Incremental row echelon form over the integers. Rows are kept primitive
/// (content 1, positive leading entry) and eliminated fraction-free, so
/// coefficients stay small on the sparse 0/±1 systems built here. Column 0
/// is the leading (most significant) column.
class SparseEchelon {
public:
  explicit SparseEchelon(int ncols) : pivot_row_(ncols, -1) {}

  int ncols() const { return static_cast<int>(pivot_row_.size()); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  /// Pivot columns in increasing order.
  std::vector<int> pivot_columns() const;

  /// Reduces the row against the current basis and keeps it if anything is
  /// left. Returns true when the rank grew.
  bool insert(SparseRow<BigInt> row);

  /// Remainder of f after eliminating every pivot column.
  std::map<int, Rational> reduce(std::map<int, Rational> f) const;

  /// Reduced row echelon form, rows sorted by pivot column.
  std::vector<SparseRow<Rational>> reduced_rows() const;

private:
  std::vector<SparseRow<BigInt>> rows_;
  std::vector<int> pivot_row_;
};

/// Rank of an integer matrix by fraction-free Bareiss elimination.
Eigen::Index exact_rank(Matrix<BigInt> m);
/// Rank of a rational matrix; each row is scaled to integers first.
Eigen::Index exact_rank(const Matrix<Rational> &m);

} // namespace ctq
