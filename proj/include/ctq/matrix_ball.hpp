#pragma once

#include "ctq/matrix.hpp"
#include "ctq/tableau.hpp"

#include <stdexcept>
#include <vector>

namespace ctq {

/// Ball labels of a nonnegative matrix. The a_ij balls in cell (i,j) carry
/// the labels base(i,j)+1 .. base(i,j)+a_ij, where base(i,j) is the largest
/// label in any other nonempty cell weakly north-west of (i,j).
struct BallDiagram {
  Matrix<long> base;
  Matrix<long> count;
  long max_label = 0;
  /// positions[l-1] lists the cells holding label l, rows strictly
  /// increasing (and so columns strictly decreasing).
  std::vector<std::vector<Cell>> positions;

  long first_label(int i, int j) const { return base(i, j) + 1; }
  long last_label(int i, int j) const { return base(i, j) + count(i, j); }
};

template <typename Derived>
BallDiagram label_balls(const Eigen::MatrixBase<Derived> &a) {
  if (!is_nonnegative(a))
    throw std::invalid_argument("matrix has a negative entry");
  const Eigen::Index k = a.rows(), p = a.cols();
  BallDiagram d;
  d.base = Matrix<long>::Zero(k, p);
  d.count = Matrix<long>::Zero(k, p);
  // reach(i,j): largest label in the closed quadrant above-left of (i,j).
  Matrix<long> reach = Matrix<long>::Zero(k, p);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < p; ++j) {
      long b = 0;
      if (i > 0)
        b = std::max(b, reach(i - 1, j));
      if (j > 0)
        b = std::max(b, reach(i, j - 1));
      long c = static_cast<long>(a(i, j));
      d.base(i, j) = b;
      d.count(i, j) = c;
      reach(i, j) = b + c;
    }
  d.max_label = (k && p) ? reach(k - 1, p - 1) : 0;
  d.positions.assign(d.max_label, {});
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < p; ++j)
      for (long l = d.base(i, j) + 1; l <= d.base(i, j) + d.count(i, j); ++l)
        d.positions[l - 1].emplace_back(static_cast<int>(i),
                                        static_cast<int>(j));
  return d;
}

template <typename Scalar> struct StepResult {
  Matrix<Scalar> next;
  /// x[i]: labels whose northern ball lies in row i.
  std::vector<int> x;
  /// y[j]: labels whose western ball lies in column j.
  std::vector<int> y;
};

/// One step of the matrix-ball construction. For a label with balls at
/// (i1,j1),...,(im,jm), rows increasing and columns decreasing, the next
/// matrix gets a ball at each south-east corner (i2,j1),...,(im,j_{m-1}).
template <typename Derived>
StepResult<typename Derived::Scalar>
one_step(const Eigen::MatrixBase<Derived> &a) {
  using S = typename Derived::Scalar;
  BallDiagram d = label_balls(a);
  StepResult<S> r;
  r.next = Matrix<S>::Zero(a.rows(), a.cols());
  r.x.assign(a.rows(), 0);
  r.y.assign(a.cols(), 0);
  for (const auto &pos : d.positions) {
    ++r.x[pos.front().first];
    ++r.y[pos.back().second];
    for (std::size_t t = 0; t + 1 < pos.size(); ++t)
      r.next(pos[t + 1].first, pos[t].second) += S(1);
  }
  return r;
}

template <typename Derived>
Matrix<typename Derived::Scalar> mb(const Eigen::MatrixBase<Derived> &a) {
  return one_step(a).next;
}

struct RskPair {
  Tableau p;
  Tableau q;
};

/// RSK through repeated matrix-ball steps. Row t of P holds x_i copies of
/// i+1 from step t, and likewise Q from y.
template <typename Derived>
RskPair rsk(const Eigen::MatrixBase<Derived> &a) {
  using S = typename Derived::Scalar;
  Matrix<S> cur = a;
  std::vector<std::vector<int>> prow, qrow;
  while (!support(cur).empty()) {
    auto step = one_step(cur);
    std::vector<int> pr, qr;
    for (std::size_t i = 0; i < step.x.size(); ++i)
      pr.insert(pr.end(), step.x[i], static_cast<int>(i) + 1);
    for (std::size_t j = 0; j < step.y.size(); ++j)
      qr.insert(qr.end(), step.y[j], static_cast<int>(j) + 1);
    prow.push_back(std::move(pr));
    qrow.push_back(std::move(qr));
    cur = std::move(step.next);
  }
  return {Tableau(prow), Tableau(qrow)};
}

/// A maximum-weight zigzag set, listed with rows and columns increasing.
/// Starts from the first cell in row-major order that holds the largest
/// label, then repeatedly moves to the first cell weakly north-west holding
/// the label just below the smallest label of the current cell.
template <typename Derived>
std::vector<Cell> zigzag_witness(const Eigen::MatrixBase<Derived> &a) {
  BallDiagram d = label_balls(a);
  std::vector<Cell> z;
  if (d.max_label == 0)
    return z;
  Cell cur = d.positions[d.max_label - 1].front();
  z.push_back(cur);
  for (;;) {
    long below = d.base(cur.first, cur.second);
    if (below == 0)
      break;
    Cell next{-1, -1};
    for (auto c : d.positions[below - 1])
      if (c.first <= cur.first && c.second <= cur.second) {
        next = c;
        break;
      }
    if (next.first < 0)
      throw std::logic_error("ball labelling is inconsistent");
    z.push_back(next);
    cur = next;
  }
  std::reverse(z.begin(), z.end());
  return z;
}

/// Decides whether B = mb(A) for some A with row sums alpha and column sums
/// beta, from the prefix conditions on the northern and western ball counts
/// of B. Throws std::invalid_argument when B has the wrong dimensions or a
/// negative entry. A B whose margins exceed alpha or beta is never an image,
/// and gives false.
template <typename Derived>
bool is_mb_image(const Eigen::MatrixBase<Derived> &b,
                 const WeakComposition &alpha, const WeakComposition &beta) {
  if (static_cast<std::size_t>(b.rows()) != alpha.length() ||
      static_cast<std::size_t>(b.cols()) != beta.length())
    throw std::invalid_argument("matrix dimensions do not match margins");
  if (!is_nonnegative(b))
    throw std::invalid_argument("matrix has a negative entry");
  if (!is_subtingency(b, alpha, beta))
    return false;
  auto step = one_step(b);
  auto rows = row_sums(b);
  auto cols = col_sums(b);
  auto check = [](const std::vector<int> &x, const WeakComposition &total,
                  const WeakComposition &used) {
    long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      lhs += x[i];
      if (lhs > rhs)
        return false;
      rhs += total[i] - used[i];
    }
    return true;
  };
  return check(step.x, alpha, rows) && check(step.y, beta, cols);
}

} // namespace ctq
