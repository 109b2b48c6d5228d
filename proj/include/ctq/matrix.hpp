#pragma once

#include "ctq/partition.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ctq {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Default table type. Entries are nonnegative; the templated algorithms
/// below accept any integral Eigen scalar, including BigInt.
using NonnegMatrix = Matrix<int>;

/// Matrix cell, 0-based.
using Cell = std::pair<int, int>;

template <typename Derived>
WeakComposition row_sums(const Eigen::MatrixBase<Derived> &a) {
  std::vector<int> r(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    r[i] = static_cast<int>(a.row(i).sum());
  return WeakComposition(r);
}

template <typename Derived>
WeakComposition col_sums(const Eigen::MatrixBase<Derived> &a) {
  std::vector<int> c(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    c[j] = static_cast<int>(a.col(j).sum());
  return WeakComposition(c);
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived> &a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) < 0)
        return false;
  return true;
}

/// Maximum weight of a set of cells whose rows and columns both weakly
/// increase. Dynamic programme over the monotone lattice paths.
template <typename Derived>
typename Derived::Scalar zigzag_number(const Eigen::MatrixBase<Derived> &a) {
  using S = typename Derived::Scalar;
  const Eigen::Index k = a.rows(), p = a.cols();
  if (k == 0 || p == 0)
    return S(0);
  Matrix<S> best(k, p);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < p; ++j) {
      S prev(0);
      if (i > 0)
        prev = best(i - 1, j);
      if (j > 0 && best(i, j - 1) > prev)
        prev = best(i, j - 1);
      best(i, j) = prev + a(i, j);
    }
  return best(k - 1, p - 1);
}

/// True when every pair of cells in the set is comparable in the product
/// order, so the cells can be listed with rows and columns weakly increasing.
inline bool is_zigzag_set(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  for (std::size_t t = 1; t < cells.size(); ++t)
    if (cells[t].second < cells[t - 1].second)
      return false;
  return true;
}

template <typename Derived>
std::vector<Cell> support(const Eigen::MatrixBase<Derived> &a) {
  std::vector<Cell> s;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        s.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return s;
}

/// A matrix is a zigzag when its support is a zigzag set.
template <typename Derived>
bool is_zigzag_matrix(const Eigen::MatrixBase<Derived> &a) {
  return is_zigzag_set(support(a));
}

template <typename Derived>
typename Derived::Scalar weight(const Eigen::MatrixBase<Derived> &a,
                                const std::vector<Cell> &cells) {
  typename Derived::Scalar w(0);
  for (auto [i, j] : cells)
    w += a(i, j);
  return w;
}

/// Row and column sums bounded componentwise by alpha and beta.
template <typename Derived>
bool is_subtingency(const Eigen::MatrixBase<Derived> &a,
                    const WeakComposition &alpha,
                    const WeakComposition &beta) {
  if (static_cast<std::size_t>(a.rows()) != alpha.length() ||
      static_cast<std::size_t>(a.cols()) != beta.length() || !is_nonnegative(a))
    return false;
  auto r = row_sums(a);
  auto c = col_sums(a);
  for (std::size_t i = 0; i < alpha.length(); ++i)
    if (r[i] > alpha[i])
      return false;
  for (std::size_t j = 0; j < beta.length(); ++j)
    if (c[j] > beta[j])
      return false;
  return true;
}

/// All nonnegative integer matrices with row sums alpha and column sums
/// beta, in lexicographic order of their row-major entries. Throws
/// std::domain_error when the sums differ.
std::vector<NonnegMatrix> enum_contingency(const WeakComposition &alpha,
                                           const WeakComposition &beta);

/// Calls f on each table without storing them.
template <typename F>
void for_each_contingency(const WeakComposition &alpha,
                          const WeakComposition &beta, F &&f) {
  if (alpha.sum() != beta.sum())
    throw std::domain_error("row and column sums differ");
  const int k = static_cast<int>(alpha.length());
  const int p = static_cast<int>(beta.length());
  NonnegMatrix a = NonnegMatrix::Zero(k, p);
  std::vector<int> colleft(beta.parts());
  auto rec = [&](auto &self, int i, int j, int rowleft) -> void {
    if (i == k) {
      f(static_cast<const NonnegMatrix &>(a));
      return;
    }
    if (j == p - 1) {
      if (rowleft > colleft[j])
        return;
      a(i, j) = rowleft;
      colleft[j] -= rowleft;
      self(self, i + 1, 0, i + 1 < k ? alpha[i + 1] : 0);
      colleft[j] += rowleft;
      a(i, j) = 0;
      return;
    }
    // The remaining columns must be able to absorb what is left of the row.
    int rest = 0;
    for (int t = j + 1; t < p; ++t)
      rest += colleft[t];
    int lo = std::max(0, rowleft - rest);
    int hi = std::min(rowleft, colleft[j]);
    for (int v = lo; v <= hi; ++v) {
      a(i, j) = v;
      colleft[j] -= v;
      self(self, i, j + 1, rowleft - v);
      colleft[j] += v;
    }
    a(i, j) = 0;
  };
  if (k == 0 || p == 0) {
    if (alpha.sum() == 0)
      f(static_cast<const NonnegMatrix &>(a));
    return;
  }
  rec(rec, 0, 0, alpha[0]);
}

} // namespace ctq
