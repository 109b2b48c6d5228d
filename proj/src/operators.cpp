#include "ctq/operators.hpp"

#include <stdexcept>

namespace ctq {

Poly apply_diff(const Poly &f, const Poly &g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("polynomials on different grids");
  Poly r(g.rows(), g.cols());
  for (const auto &[mf, cf] : f.terms())
    for (const auto &[mg, cg] : g.terms()) {
      auto q = mf.quotient_of(mg);
      if (!q)
        continue;
      // d^e x^b = b!/(b-e)! x^(b-e)
      BigInt falling = 1;
      for (int v = 0; v < mf.nvars(); ++v)
        for (int t = 0; t < mf[v]; ++t)
          falling *= mg[v] - t;
      r.add_term(*q, cf * cg * Rational(falling));
    }
  return r;
}

Poly polarize_row(const Poly &f, int from, int to) {
  if (from < 0 || to < 0 || from >= f.rows() || to >= f.rows())
    throw std::out_of_range("row index outside the grid");
  Poly r(f.rows(), f.cols());
  for (int j = 0; j < f.cols(); ++j)
    r += f.derivative(from, j) * Monomial::variable(f.rows(), f.cols(), to, j);
  return r;
}

Poly polarize_col(const Poly &f, int from, int to) {
  if (from < 0 || to < 0 || from >= f.cols() || to >= f.cols())
    throw std::out_of_range("column index outside the grid");
  Poly r(f.rows(), f.cols());
  for (int i = 0; i < f.rows(); ++i)
    r += f.derivative(i, from) * Monomial::variable(f.rows(), f.cols(), i, to);
  return r;
}

NonnegMatrix shift_row(const NonnegMatrix &a, int from, int to, int m) {
  if (from < 0 || to < 0 || from >= a.rows() || to >= a.rows())
    throw std::out_of_range("row index outside the matrix");
  if (m < 0 || m > a.row(from).sum())
    throw std::invalid_argument("shift magnitude exceeds the row sum");
  NonnegMatrix b = a;
  int left = m;
  for (Eigen::Index j = 0; j < a.cols() && left > 0; ++j) {
    int c = std::min(left, a(from, j));
    b(from, j) -= c;
    b(to, j) += c;
    left -= c;
  }
  return b;
}

NonnegMatrix shift_col(const NonnegMatrix &a, int from, int to, int m) {
  return shift_row(a.transpose(), from, to, m).transpose();
}

WeakComposition split_left(const WeakComposition &d, int s, int m) {
  if (s < 0)
    throw std::invalid_argument("negative split step");
  std::size_t lead = 0;
  while (lead < d.length() && d[lead] == 0)
    ++lead;
  if (lead < static_cast<std::size_t>(s))
    throw std::invalid_argument("split needs at least s leading zeros");
  if (m < 0 || m > d.sum())
    throw std::invalid_argument("split magnitude exceeds the total");
  std::vector<int> r = d.parts();
  int left = m;
  for (std::size_t j = lead; j < d.length() && left > 0; ++j) {
    int c = std::min(left, d[j]);
    r[j] -= c;
    r[j - s] += c;
    left -= c;
  }
  return WeakComposition(r);
}

NonnegMatrix merge_row(const NonnegMatrix &a) {
  if (!is_zigzag_matrix(a))
    throw std::invalid_argument("merge needs a zigzag matrix");
  int first = -1, second = -1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (a.row(i).sum() != 0) {
      if (first < 0)
        first = static_cast<int>(i);
      else if (second < 0)
        second = static_cast<int>(i);
    }
  if (second < 0)
    throw std::invalid_argument("merge needs two nonzero rows");
  NonnegMatrix b = a;
  b.row(second) += b.row(first);
  b.row(first).setZero();
  return b;
}

} // namespace ctq
