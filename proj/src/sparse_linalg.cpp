#include "ctq/sparse_linalg.hpp"

#include <algorithm>

namespace ctq {

namespace {

void make_primitive(SparseRow<BigInt> &row) {
  if (row.empty())
    return;
  BigInt g = 0;
  for (const auto &[c, v] : row) {
    g = gcd(g, v);
    if (g == 1)
      break;
  }
  if (row.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto &[c, v] : row)
      v /= g;
}

// a*x - b*y, dropping zeros.
SparseRow<BigInt> combine(const BigInt &a, const SparseRow<BigInt> &x,
                          const BigInt &b, const SparseRow<BigInt> &y) {
  SparseRow<BigInt> r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      BigInt v = a * x[i].second - b * y[j].second;
      if (v != 0)
        r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

} // namespace

std::vector<int> SparseEchelon::pivot_columns() const {
  std::vector<int> p;
  for (const auto &r : rows_)
    p.push_back(r.front().first);
  std::sort(p.begin(), p.end());
  return p;
}

bool SparseEchelon::insert(SparseRow<BigInt> row) {
  make_primitive(row);
  while (!row.empty()) {
    int c = row.front().first;
    int pr = pivot_row_[c];
    if (pr < 0) {
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const auto &p = rows_[pr];
    const BigInt &a = p.front().second;
    const BigInt &b = row.front().second;
    BigInt g = gcd(a, b);
    row = combine(a / g, row, b / g, p);
    make_primitive(row);
  }
  return false;
}

std::map<int, Rational> SparseEchelon::reduce(std::map<int, Rational> f) const {
  auto it = f.begin();
  while (it != f.end()) {
    int c = it->first;
    int pr = pivot_row_[c];
    if (pr < 0) {
      ++it;
      continue;
    }
    const auto &p = rows_[pr];
    Rational factor = it->second / Rational(p.front().second);
    for (const auto &[col, v] : p) {
      auto [jt, inserted] = f.try_emplace(col, 0);
      jt->second -= factor * Rational(v);
      if (jt->second == 0 && col != c)
        f.erase(jt);
    }
    f.erase(c);
    it = f.upper_bound(c);
  }
  return f;
}

std::vector<SparseRow<Rational>> SparseEchelon::reduced_rows() const {
  std::vector<int> order(rows_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t)
    order[t] = static_cast<int>(t);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return rows_[x].front().first < rows_[y].front().first;
  });
  std::vector<std::map<int, Rational>> done(rows_.size());
  std::vector<int> done_row(pivot_row_.size(), -1);
  // Last pivot first, so every later pivot is already reduced.
  for (std::size_t t = order.size(); t-- > 0;) {
    const auto &src = rows_[order[t]];
    Rational lead = Rational(src.front().second);
    std::map<int, Rational> r;
    for (const auto &[c, v] : src)
      r.emplace(c, Rational(v) / lead);
    int pc = src.front().first;
    for (auto it = std::next(r.begin()); it != r.end();) {
      int c = it->first;
      int dr = done_row[c];
      if (dr < 0) {
        ++it;
        continue;
      }
      Rational factor = it->second;
      for (const auto &[col, v] : done[dr]) {
        auto [jt, inserted] = r.try_emplace(col, 0);
        jt->second -= factor * v;
        if (jt->second == 0 && col != c)
          r.erase(jt);
      }
      r.erase(c);
      it = r.upper_bound(c);
    }
    done[t] = std::move(r);
    done_row[pc] = static_cast<int>(t);
  }
  std::vector<SparseRow<Rational>> out;
  for (auto &m : done)
    out.emplace_back(m.begin(), m.end());
  return out;
}

Eigen::Index exact_rank(Matrix<BigInt> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  BigInt prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Eigen::Index exact_rank(const Matrix<Rational> &m) {
  Matrix<BigInt> z(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = lcm(l, BigInt(denominator(m(i, j))));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      z(i, j) = BigInt(numerator(m(i, j))) * (l / BigInt(denominator(m(i, j))));
  }
  return exact_rank(std::move(z));
}

} // namespace ctq
