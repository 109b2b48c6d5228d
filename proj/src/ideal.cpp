#include "ctq/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ctq {

namespace {

bool is_monomial(const Poly &g) { return g.size() == 1; }

// Integer multiple of g with coprime coefficients.
std::vector<std::pair<Monomial, BigInt>> integer_terms(const Poly &g) {
  BigInt l = 1;
  for (const auto &[m, c] : g.terms())
    l = lcm(l, BigInt(denominator(c)));
  std::vector<std::pair<Monomial, BigInt>> out;
  for (const auto &[m, c] : g.terms())
    out.emplace_back(m, BigInt(numerator(c)) * (l / BigInt(denominator(c))));
  return out;
}

} // namespace

Ideal::Ideal(std::vector<Poly> generators, DiagonalOrder order)
    : generators_(std::move(generators)), order_(std::move(order)) {
  for (const auto &g : generators_) {
    if (g.rows() != order_.rows() || g.cols() != order_.cols())
      throw std::invalid_argument("generator on a different grid");
    if (!g.is_homogeneous())
      throw std::invalid_argument("generator is not homogeneous");
    if (g.is_zero())
      continue;
    if (is_monomial(g))
      monomial_gens_.push_back(g.terms().begin()->first);
    else
      other_gens_.push_back(g);
  }
}

bool Ideal::in_monomial_part(const Monomial &m) const {
  for (const auto &g : monomial_gens_)
    if (g.divides(m))
      return true;
  return false;
}

bool Ideal::has_slice(int d) const {
  return d >= 0 && d < static_cast<int>(slices_.size());
}

const DegreeBasis &Ideal::slice(int d) const {
  if (!has_slice(d))
    throw std::out_of_range("degree slice has not been built");
  return slices_[d];
}

void Ideal::ensure(int d) {
  while (static_cast<int>(slices_.size()) <= d)
    build_next();
}

void Ideal::build_next() {
  const int d = static_cast<int>(slices_.size());
  const int nv = rows() * cols();
  DegreeBasis b;
  b.degree = d;

  // Monomials outside M form an order ideal, so degree d comes from
  // degree d-1 times a variable.
  if (d == 0) {
    Monomial one(rows(), cols());
    if (!in_monomial_part(one))
      b.columns.push_back(one);
  } else {
    std::set<Monomial> next;
    for (const auto &m : slices_[d - 1].columns)
      for (int v = 0; v < nv; ++v) {
        Monomial t = m;
        ++t[v];
        if (!in_monomial_part(t))
          next.insert(std::move(t));
      }
    b.columns.assign(next.begin(), next.end());
  }
  std::sort(b.columns.begin(), b.columns.end(),
            [&](const Monomial &x, const Monomial &y) {
              return order_.less(y, x);
            });
  for (std::size_t c = 0; c < b.columns.size(); ++c)
    b.column_index.emplace(b.columns[c], static_cast<int>(c));
  b.monomial_part_count =
      binomial(d + nv - 1, nv - 1) - BigInt(b.columns.size());
  if (nv == 0)
    b.monomial_part_count = 0;

  const int ncols = static_cast<int>(b.columns.size());
  b.echelon = SparseEchelon(ncols);
  for (const auto &g : other_gens_) {
    int e = g.degree();
    if (e > d || b.echelon.rank() == ncols)
      continue;
    auto terms = integer_terms(g);
    // e >= 1 here: a single-term generator went to the monomial part.
    for (const auto &m : slices_[d - e].columns) {
      SparseRow<BigInt> row;
      for (const auto &[t, c] : terms) {
        auto it = b.column_index.find(t * m);
        if (it != b.column_index.end())
          row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto &x, const auto &y) { return x.first < y.first; });
      if (!row.empty())
        b.echelon.insert(std::move(row));
      if (b.echelon.rank() == ncols)
        break;
    }
  }
  for (int c = 0; c < ncols; ++c)
    (b.echelon.is_pivot(c) ? b.leading : b.standard).push_back(b.columns[c]);
  slices_.push_back(std::move(b));
}

Poly Ideal::normal_form(const Poly &f) const {
  if (f.rows() != rows() || f.cols() != cols())
    throw std::invalid_argument("polynomial on a different grid");
  std::map<int, std::map<int, Rational>> by_degree;
  for (const auto &[m, c] : f.terms()) {
    int e = m.degree();
    const auto &s = slice(e);
    auto it = s.column_index.find(m);
    if (it != s.column_index.end())
      by_degree[e][it->second] += c;
  }
  Poly r(rows(), cols());
  for (auto &[e, vec] : by_degree) {
    std::erase_if(vec, [](const auto &kv) { return kv.second == 0; });
    const auto &s = slices_[e];
    for (const auto &[c, v] : s.echelon.reduce(std::move(vec)))
      r.add_term(s.columns[c], v);
  }
  return r;
}

DegreeBasis ideal_slice(const std::vector<Poly> &generators, int d,
                        const DiagonalOrder &order) {
  Ideal ideal(generators, order);
  ideal.ensure(d);
  return ideal.slice(d);
}

Monomial fin_smallest(const Poly &f, const DiagonalOrder &order) {
  if (f.is_zero())
    throw std::invalid_argument("zero polynomial has no monomials");
  const Monomial *best = nullptr;
  for (const auto &[m, c] : f.terms())
    if (!best || order.less(m, *best))
      best = &m;
  return *best;
}

Monomial in_largest(const Poly &f, const DiagonalOrder &order) {
  if (f.is_zero())
    throw std::invalid_argument("zero polynomial has no monomials");
  const Monomial *best = nullptr;
  for (const auto &[m, c] : f.terms())
    if (!best || order.less(*best, m))
      best = &m;
  return *best;
}

std::vector<Monomial> span_extreme_monomials(const std::vector<Poly> &polys,
                                             const DiagonalOrder &order,
                                             bool largest) {
  std::set<Monomial> all;
  for (const auto &f : polys)
    for (const auto &[m, c] : f.terms())
      all.insert(m);
  std::vector<Monomial> cols(all.begin(), all.end());
  std::sort(cols.begin(), cols.end(),
            [&](const Monomial &x, const Monomial &y) {
              return largest ? order.less(y, x) : order.less(x, y);
            });
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (std::size_t c = 0; c < cols.size(); ++c)
    index.emplace(cols[c], static_cast<int>(c));
  SparseEchelon ech(static_cast<int>(cols.size()));
  for (const auto &f : polys) {
    auto terms = integer_terms(f);
    SparseRow<BigInt> row;
    for (const auto &[m, c] : terms)
      row.emplace_back(index.at(m), c);
    std::sort(row.begin(), row.end(),
              [](const auto &x, const auto &y) { return x.first < y.first; });
    ech.insert(std::move(row));
  }
  std::vector<Monomial> out;
  for (int c : ech.pivot_columns())
    out.push_back(cols[c]);
  std::sort(out.begin(), out.end(), [&](const Monomial &x, const Monomial &y) {
    return order.less(y, x);
  });
  return out;
}

} // namespace ctq
