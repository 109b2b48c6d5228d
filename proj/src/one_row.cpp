#include "ctq/one_row.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ctq {

std::vector<Poly> generators_one_row(const OneRowSpec &spec) {
  const int n = spec.n();
  std::vector<Poly> gens;
  Poly sum(1, n);
  for (int i = 0; i < n; ++i) {
    Monomial m(1, n);
    m[i] = spec.d[i] + 1;
    gens.push_back(Poly::term(m));
    sum.add_term(Monomial::variable(1, n, 0, i), 1);
  }
  if (std::find(gens.begin(), gens.end(), sum) == gens.end())
    gens.push_back(sum);
  return gens;
}

QPoly one_row_hilbert(const OneRowSpec &spec) {
  QPoly p{1};
  for (int di : spec.d.parts())
    p = multiply(p, QPoly(di + 1, BigInt(1)));
  p = multiply(p, QPoly{1, -1});
  p.resize(std::min<std::size_t>(p.size(), spec.total() / 2 + 1));
  trim(p);
  return p;
}

std::vector<TwoRowTableau> enum_Td(const OneRowSpec &spec) {
  const int n = spec.n();
  std::vector<TwoRowTableau> out;
  std::vector<int> used(n + 1, 0);
  TwoRowTableau cur;
  auto rec = [&](auto &self, int a0, int b0) -> void {
    out.push_back(cur);
    for (int a = a0; a <= n; ++a) {
      if (used[a] >= spec.d[a - 1])
        continue;
      for (int b = std::max(b0, a + 1); b <= n; ++b) {
        if (used[b] >= spec.d[b - 1])
          continue;
        ++used[a];
        ++used[b];
        cur.first.push_back(a);
        cur.second.push_back(b);
        self(self, a, b);
        cur.first.pop_back();
        cur.second.pop_back();
        --used[a];
        --used[b];
      }
    }
  };
  rec(rec, 1, 2);
  return out;
}

OneRowCounts counts_match(const OneRowSpec &spec) {
  OneRowCounts c;
  c.dimension = evaluate_at_one(one_row_hilbert(spec));
  std::set<std::vector<int>> firsts, seconds;
  for (const auto &t : enum_Td(spec)) {
    firsts.insert(t.first);
    seconds.insert(t.second);
  }
  c.first_rows = firsts.size();
  c.second_rows = seconds.size();
  return c;
}

WeakComposition phi_map(const TwoRowTableau &t, int n) {
  std::vector<int> c(n, 0);
  for (int a : t.first) {
    if (a < 1 || a > n)
      throw std::out_of_range("tableau entry outside 1..n");
    ++c[a - 1];
  }
  return WeakComposition(c);
}

Dotting dot_composition(const WeakComposition &beta, const OneRowSpec &spec) {
  const int n = spec.n();
  if (static_cast<int>(beta.length()) != n)
    throw std::invalid_argument("composition length differs from d");
  for (int i = 0; i < n; ++i)
    if (beta[i] > spec.d[i])
      throw std::invalid_argument("composition exceeds d");
  Dotting r;
  r.dots.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int need = beta[i];
    for (int j = i + 1; j < n && need > 0; ++j) {
      int room = spec.d[j] - beta[j] - r.dots[j];
      int take = std::min(room, need);
      for (int t = 0; t < take; ++t)
        r.columns.emplace_back(i + 1, j + 1);
      r.dots[j] += take;
      need -= take;
    }
    if (need > 0)
      r.unsatisfied.push_back(i + 1);
  }
  std::sort(r.columns.begin(), r.columns.end());
  std::sort(r.unsatisfied.begin(), r.unsatisfied.end());
  return r;
}

WeakComposition psi_injection(const WeakComposition &beta,
                              const OneRowSpec &spec) {
  if (2 * (beta.sum() + 1) > spec.total())
    throw std::invalid_argument("composition is too large for psi");
  Dotting dt = dot_composition(beta, spec);
  for (int j = spec.n() - 1; j >= 0; --j)
    if (beta[j] + dt.dots[j] < spec.d[j]) {
      std::vector<int> r = beta.parts();
      ++r[j];
      return WeakComposition(r);
    }
  throw std::invalid_argument("every entry is saturated");
}

std::optional<TwoRowTableau> tableau_from_first_row(const WeakComposition &beta,
                                                    const OneRowSpec &spec) {
  Dotting dt = dot_composition(beta, spec);
  if (!dt.unsatisfied.empty())
    return std::nullopt;
  TwoRowTableau t;
  for (auto [a, b] : dt.columns) {
    t.first.push_back(a);
    t.second.push_back(b);
  }
  return t;
}

Poly f_T_poly(const TwoRowTableau &t, int n) {
  Poly f = Poly::constant(1, n, 1);
  for (std::size_t c = 0; c < t.columns(); ++c) {
    Poly lin = Poly::variable(1, n, 0, t.first[c] - 1) -
               Poly::variable(1, n, 0, t.second[c] - 1);
    f = f * lin;
  }
  return f;
}

Monomial second_row_monomial(const TwoRowTableau &t, int n) {
  Monomial m(1, n);
  for (int b : t.second)
    ++m[b - 1];
  return m;
}

std::vector<WeakComposition> bounded_compositions(const WeakComposition &d,
                                                  int m) {
  std::vector<WeakComposition> out;
  const int n = static_cast<int>(d.length());
  std::vector<int> cur(n, 0);
  std::vector<int> tail(n + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    tail[i] = tail[i + 1] + d[i];
  auto rec = [&](auto &self, int i, int left) -> void {
    if (i == n) {
      if (left == 0)
        out.emplace_back(cur);
      return;
    }
    for (int v = std::min(left, d[i]); v >= 0; --v) {
      if (left - v > tail[i + 1])
        break;
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  if (m >= 0)
    rec(rec, 0, m);
  return out;
}

} // namespace ctq
