#include "ctq/quotient.hpp"

#include "ctq/matrix_ball.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ctq {

namespace {

// Exponent vectors of length len with the given total.
void exponent_vectors(int len, int total, std::vector<std::vector<int>> &out) {
  std::vector<int> e(len, 0);
  auto rec = [&](auto &self, int v, int left) -> void {
    if (v == len - 1) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[v] = t;
      self(self, v + 1, left - t);
    }
  };
  if (len > 0)
    rec(rec, 0, total);
}

// x(x-1)...(x-e+1) in variable (i,j).
Poly falling(int k, int p, int i, int j, int e) {
  Poly f = Poly::constant(k, p, 1);
  for (int t = 0; t < e; ++t)
    f = f * (Poly::variable(k, p, i, j) - Poly::constant(k, p, t));
  return f;
}

struct GeneratorWithLift {
  Poly generator;
  Poly lift;
};

class GeneratorSet {
public:
  void add(Poly g, Poly lift) {
    if (seen_.insert(g.terms()).second)
      items_.push_back({std::move(g), std::move(lift)});
  }
  const std::vector<GeneratorWithLift> &items() const { return items_; }
  std::vector<Poly> generators() const {
    std::vector<Poly> out;
    for (const auto &it : items_)
      out.push_back(it.generator);
    return out;
  }

private:
  std::set<Poly::TermMap> seen_;
  std::vector<GeneratorWithLift> items_;
};

void add_row_sums(GeneratorSet &s, const WeakComposition &alpha, int p) {
  const int k = static_cast<int>(alpha.length());
  for (int i = 0; i < k; ++i) {
    Poly g(k, p);
    for (int j = 0; j < p; ++j)
      g.add_term(Monomial::variable(k, p, i, j), 1);
    Poly lift = g - Poly::constant(k, p, alpha[i]);
    s.add(std::move(g), std::move(lift));
  }
}

void add_col_sums(GeneratorSet &s, const WeakComposition &beta, int k) {
  const int p = static_cast<int>(beta.length());
  for (int j = 0; j < p; ++j) {
    Poly g(k, p);
    for (int i = 0; i < k; ++i)
      g.add_term(Monomial::variable(k, p, i, j), 1);
    Poly lift = g - Poly::constant(k, p, beta[j]);
    s.add(std::move(g), std::move(lift));
  }
}

void add_row_monomials(GeneratorSet &s, const WeakComposition &alpha, int p) {
  const int k = static_cast<int>(alpha.length());
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> vecs;
    exponent_vectors(p, alpha[i] + 1, vecs);
    for (const auto &e : vecs) {
      Monomial m(k, p);
      Poly lift = Poly::constant(k, p, 1);
      for (int j = 0; j < p; ++j) {
        m[i * p + j] = e[j];
        lift = lift * falling(k, p, i, j, e[j]);
      }
      s.add(Poly::term(m), std::move(lift));
    }
  }
}

void add_col_monomials(GeneratorSet &s, const WeakComposition &beta, int k) {
  const int p = static_cast<int>(beta.length());
  for (int j = 0; j < p; ++j) {
    std::vector<std::vector<int>> vecs;
    exponent_vectors(k, beta[j] + 1, vecs);
    for (const auto &e : vecs) {
      Monomial m(k, p);
      Poly lift = Poly::constant(k, p, 1);
      for (int i = 0; i < k; ++i) {
        m[i * p + j] = e[i];
        lift = lift * falling(k, p, i, j, e[i]);
      }
      s.add(Poly::term(m), std::move(lift));
    }
  }
}

GeneratorSet contingency_set(const WeakComposition &alpha,
                             const WeakComposition &beta) {
  const int k = static_cast<int>(alpha.length());
  const int p = static_cast<int>(beta.length());
  GeneratorSet s;
  add_row_sums(s, alpha, p);
  add_col_sums(s, beta, k);
  add_row_monomials(s, alpha, p);
  add_col_monomials(s, beta, k);
  return s;
}

void require_equal_sums(const WeakComposition &alpha,
                        const WeakComposition &beta) {
  if (alpha.sum() != beta.sum())
    throw std::domain_error("row and column sums differ");
}

} // namespace

std::vector<Poly> generators_contingency(const WeakComposition &alpha,
                                         const WeakComposition &beta) {
  return contingency_set(alpha, beta).generators();
}

std::vector<Poly> generators_colsum(const WeakComposition &alpha, int p) {
  GeneratorSet s;
  const int k = static_cast<int>(alpha.length());
  for (int j = 0; j < p; ++j) {
    Poly g(k, p);
    for (int i = 0; i < k; ++i)
      g.add_term(Monomial::variable(k, p, i, j), 1);
    s.add(g, g);
  }
  add_row_monomials(s, alpha, p);
  return s.generators();
}

std::vector<Poly> generators_rowsum(const WeakComposition &beta, int k) {
  GeneratorSet s;
  const int p = static_cast<int>(beta.length());
  for (int i = 0; i < k; ++i) {
    Poly g(k, p);
    for (int j = 0; j < p; ++j)
      g.add_term(Monomial::variable(k, p, i, j), 1);
    s.add(g, g);
  }
  add_col_monomials(s, beta, k);
  return s.generators();
}

BigInt count_contingency(const WeakComposition &alpha,
                         const WeakComposition &beta) {
  BigInt c = 0;
  for_each_contingency(alpha, beta, [&](const NonnegMatrix &) { ++c; });
  return c;
}

QuotientModel build_quotient(const WeakComposition &alpha,
                             const WeakComposition &beta,
                             DiagonalOrder::Tie tie) {
  require_equal_sums(alpha, beta);
  const int k = static_cast<int>(alpha.length());
  const int p = static_cast<int>(beta.length());
  const int n = alpha.sum();
  QuotientModel q;
  q.alpha = alpha;
  q.beta = beta;
  q.ideal = std::make_shared<Ideal>(generators_contingency(alpha, beta),
                                    DiagonalOrder(k, p, tie));
  const BigInt target = count_contingency(alpha, beta);
  BigInt total = 0;
  for (int d = 0;; ++d) {
    if (d > n + 1)
      throw std::runtime_error("standard monomials did not converge by "
                               "degree n");
    const auto &s = q.ideal->slice(d);
    if (total == target) {
      if (!s.standard.empty())
        throw std::runtime_error("standard monomials beyond the table count");
      break;
    }
    if (s.standard.empty())
      throw std::runtime_error("quotient ended below the table count");
    total += s.standard.size();
    q.hilbert.push_back(BigInt(s.standard.size()));
    q.standard.insert(s.standard.begin(), s.standard.end());
    q.top_degree = d;
    if (total > target)
      throw std::runtime_error("standard monomials exceed the table count");
  }
  return q;
}

std::set<Monomial> standard_basis(const WeakComposition &alpha,
                                  const WeakComposition &beta) {
  return build_quotient(alpha, beta).standard;
}

std::set<Monomial> mb_monomials(const WeakComposition &alpha,
                                const WeakComposition &beta) {
  std::set<Monomial> out;
  for_each_contingency(alpha, beta, [&](const NonnegMatrix &a) {
    out.insert(Monomial::from_matrix(mb(a)));
  });
  return out;
}

QPoly hilbert_linear_algebra(const WeakComposition &alpha,
                             const WeakComposition &beta) {
  return build_quotient(alpha, beta).hilbert;
}

QPoly hilbert_zigzag(const WeakComposition &alpha,
                     const WeakComposition &beta) {
  const int n = alpha.sum();
  QPoly h(n + 1);
  for_each_contingency(alpha, beta, [&](const NonnegMatrix &a) {
    ++h[n - zigzag_number(a)];
  });
  trim(h);
  return h;
}

Poly lefschetz_element(const WeakComposition &alpha,
                       const WeakComposition &beta) {
  const int k = static_cast<int>(alpha.length());
  const int p = static_cast<int>(beta.length());
  Poly l(k, p);
  int r0 = 0;
  for (int i = 0; i < k; ++i) {
    int r1 = r0 + alpha[i]; // rows r0+1 .. r1 of the diagonal
    int c0 = 0;
    for (int j = 0; j < p; ++j) {
      int c1 = c0 + beta[j];
      if (std::max(r0, c0) < std::min(r1, c1))
        l.add_term(Monomial::variable(k, p, i, j), 1);
      c0 = c1;
    }
    r0 = r1;
  }
  return l;
}

bool LefschetzReport::all_injective() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const LefschetzEntry &e) { return e.injective; });
}

LefschetzReport lefschetz_check(const QuotientModel &model) {
  LefschetzReport rep;
  rep.n = model.alpha.sum();
  int m = std::numeric_limits<int>::max();
  for_each_contingency(model.alpha, model.beta, [&](const NonnegMatrix &a) {
    m = std::min(m, zigzag_number(a));
  });
  rep.min_zigzag = m;
  const Ideal &ideal = *model.ideal;
  const Poly l = lefschetz_element(model.alpha, model.beta);
  auto standard_in = [&](int d) -> std::vector<Monomial> {
    if (!ideal.has_slice(d))
      return {};
    return ideal.slice(d).standard;
  };
  for (int k = 0; 2 * k <= rep.n - m; ++k) {
    LefschetzEntry e;
    e.k = k;
    e.power = rep.n - m - 2 * k;
    auto src = standard_in(k);
    auto tgt = standard_in(rep.n - m - k);
    e.source_dim = static_cast<int>(src.size());
    e.target_dim = static_cast<int>(tgt.size());
    std::unordered_map<Monomial, int, MonomialHash> row_of;
    for (std::size_t r = 0; r < tgt.size(); ++r)
      row_of.emplace(tgt[r], static_cast<int>(r));
    Matrix<Rational> mat = Matrix<Rational>::Zero(tgt.size(), src.size());
    Poly lp = l.pow(e.power);
    for (std::size_t c = 0; c < src.size(); ++c) {
      Poly image = ideal.normal_form(lp * src[c]);
      for (const auto &[mono, coef] : image.terms())
        mat(row_of.at(mono), c) = coef;
    }
    e.rank = static_cast<int>(exact_rank(mat));
    e.injective = e.rank == e.source_dim;
    rep.entries.push_back(e);
  }
  return rep;
}

LefschetzReport lefschetz_check(const WeakComposition &alpha,
                                const WeakComposition &beta) {
  return lefschetz_check(build_quotient(alpha, beta));
}

GrIdealReport verify_gr_ideal(const QuotientModel &model) {
  GrIdealReport rep;
  auto tables = enum_contingency(model.alpha, model.beta);
  rep.tables = BigInt(tables.size());
  rep.quotient_dimension = evaluate_at_one(model.hilbert);
  const auto set = contingency_set(model.alpha, model.beta);
  for (const auto &item : set.items()) {
    ++rep.lifts_checked;
    if (!(item.lift.top_component() == item.generator))
      ++rep.top_mismatch;
    for (const auto &a : tables)
      if (item.lift.evaluate(a) != 0) {
        ++rep.lifts_failed;
        break;
      }
  }
  return rep;
}

GrIdealReport verify_gr_ideal(const WeakComposition &alpha,
                              const WeakComposition &beta) {
  return verify_gr_ideal(build_quotient(alpha, beta));
}

} // namespace ctq
