#include "ctq/monomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctq {

Monomial::Monomial(int rows, int cols, std::vector<int> exps)
    : rows_(rows), cols_(cols), exps_(std::move(exps)) {
  if (static_cast<int>(exps_.size()) != rows * cols)
    throw std::invalid_argument("exponent tuple has the wrong length");
  for (int e : exps_)
    if (e < 0)
      throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(int rows, int cols, int i, int j) {
  if (i < 0 || j < 0 || i >= rows || j >= cols)
    throw std::out_of_range("variable outside the grid");
  Monomial m(rows, cols);
  m.exps_[i * cols + j] = 1;
  return m;
}

NonnegMatrix Monomial::to_matrix() const {
  NonnegMatrix a(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      a(i, j) = exps_[i * cols_ + j];
  return a;
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::divides(const Monomial &other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("monomials on different grids");
  Monomial r = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    r.exps_[v] += other.exps_[v];
  return r;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial &other) const {
  if (!divides(other))
    return std::nullopt;
  Monomial r = other;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    r.exps_[v] -= exps_[v];
  return r;
}

std::size_t MonomialHash::operator()(const Monomial &m) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : m.exponents())
    h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

std::string to_string(const Monomial &m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      int e = m(i, j);
      if (e == 0)
        continue;
      if (!first)
        os << '*';
      first = false;
      if (m.rows() == 1)
        os << 'x' << j + 1;
      else
        os << 'x' << i + 1 << ',' << j + 1;
      if (e > 1)
        os << '^' << e;
    }
  if (first)
    os << '1';
  return os.str();
}

WeakComposition ddeg(const Monomial &m) {
  std::vector<int> d(std::max(0, m.rows() + m.cols() - 1), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      d[i + j] += m(i, j);
  return WeakComposition(d);
}

WeakComposition rdeg(const Monomial &m) {
  std::vector<int> d(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      d[i] += m(i, j);
  return WeakComposition(d);
}

WeakComposition cdeg(const Monomial &m) {
  std::vector<int> d(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      d[j] += m(i, j);
  return WeakComposition(d);
}

std::vector<Monomial> monomials_of_degree(int rows, int cols, int d) {
  std::vector<Monomial> out;
  int n = rows * cols;
  if (d < 0)
    return out;
  if (n == 0) {
    if (d == 0)
      out.emplace_back(rows, cols);
    return out;
  }
  std::vector<int> e(n, 0);
  auto rec = [&](auto &self, int v, int left) -> void {
    if (v == n - 1) {
      e[v] = left;
      out.emplace_back(rows, cols, e);
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[v] = t;
      self(self, v + 1, left - t);
    }
    e[v] = 0;
  };
  rec(rec, 0, d);
  return out;
}

DiagonalOrder::DiagonalOrder(int rows, int cols, Tie tie)
    : rows_(rows), cols_(cols), tie_(tie) {
  for (int s = 0; s <= rows + cols - 2; ++s) {
    diag_start_.push_back(static_cast<int>(ranking_.size()));
    if (tie == Tie::Row) {
      for (int i = 0; i < rows; ++i)
        if (int j = s - i; j >= 0 && j < cols)
          ranking_.push_back(i * cols + j);
    } else {
      for (int j = 0; j < cols; ++j)
        if (int i = s - j; i >= 0 && i < rows)
          ranking_.push_back(i * cols + j);
    }
  }
  diag_start_.push_back(static_cast<int>(ranking_.size()));
}

std::strong_ordering DiagonalOrder::compare(const Monomial &a,
                                            const Monomial &b) const {
  for (std::size_t s = 0; s + 1 < diag_start_.size(); ++s) {
    int da = 0, db = 0;
    for (int k = diag_start_[s]; k < diag_start_[s + 1]; ++k) {
      da += a[ranking_[k]];
      db += b[ranking_[k]];
    }
    if (auto c = da <=> db; c != 0)
      return c;
  }
  for (int v : ranking_)
    if (auto c = a[v] <=> b[v]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

} // namespace ctq
