#include "ctq/frobenius.hpp"

#include "ctq/matrix.hpp"
#include "ctq/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ctq {

std::vector<MultisetPartition>
enum_multiset_partitions(const std::vector<int> &counts, const Partition &shape) {
  std::vector<MultisetPartition> out;
  int total = 0;
  for (int c : counts)
    total += c;
  if (total != shape.size())
    return out;
  const std::size_t r = counts.size();
  std::vector<int> left = counts;
  MultisetPartition cur;

  // Fills block t letter by letter, in decreasing lexicographic order.
  auto rec = [&](auto &self, std::size_t t) -> void {
    if (t == shape.length()) {
      out.push_back(cur);
      return;
    }
    const int size = shape[t];
    // Copied: cur.blocks grows while this level is active.
    const bool bounded = t > 0 && shape[t - 1] == size;
    const std::vector<int> bound = bounded ? cur.blocks[t - 1] : std::vector<int>();
    std::vector<int> block(r, 0);
    auto fill = [&](auto &fself, std::size_t letter, int need, bool tight) -> void {
      if (letter == r) {
        if (need != 0)
          return;
        cur.blocks.push_back(block);
        for (std::size_t a = 0; a < r; ++a)
          left[a] -= block[a];
        self(self, t + 1);
        for (std::size_t a = 0; a < r; ++a)
          left[a] += block[a];
        cur.blocks.pop_back();
        return;
      }
      int hi = std::min(need, left[letter]);
      if (tight && bounded)
        hi = std::min(hi, bound[letter]);
      for (int v = hi; v >= 0; --v) {
        block[letter] = v;
        fself(fself, letter + 1, need - v,
              tight && bounded && v == bound[letter]);
      }
      block[letter] = 0;
    };
    fill(fill, 0, size, true);
  };
  rec(rec, 0);
  return out;
}

namespace {

Partition type_of(const std::vector<std::vector<int>> &blocks) {
  std::map<std::vector<int>, int> mult;
  for (const auto &b : blocks)
    ++mult[b];
  std::vector<int> parts;
  for (const auto &[b, m] : mult)
    parts.push_back(m);
  return Partition::from_unsorted(parts);
}

void require_same_size(const Partition &a, const Partition &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partitions have different sizes");
}

} // namespace

TensorSymFunc psi_h(const Partition &mu, const Partition &lambda) {
  require_same_size(mu, lambda);
  const auto sizes = distinct_parts_by_multiplicity(mu);
  TensorSymFunc r;
  r.basis = SymBasis::H;
  r.factor_degrees = multiplicity_profile(mu);
  for (const auto &pi : enum_multiset_partitions(lambda.parts(), mu)) {
    std::vector<Partition> key;
    for (int a : sizes) {
      std::vector<std::vector<int>> of_size;
      for (const auto &b : pi.blocks) {
        int s = 0;
        for (int v : b)
          s += v;
        if (s == a)
          of_size.push_back(b);
      }
      key.push_back(type_of(of_size));
    }
    r.add(key, 1);
  }
  return r;
}

TensorSymFunc psi_s(const Partition &mu, const Partition &lambda) {
  require_same_size(mu, lambda);
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, TensorSymFunc> cache;
  {
    std::lock_guard<std::mutex> lock(mu_lock);
    if (auto it = cache.find({mu, lambda}); it != cache.end())
      return it->second;
  }
  SymFunc s;
  s.basis = SymBasis::S;
  s.degree = lambda.size();
  s.add(lambda, 1);
  SymFunc h = s_to_h(s);
  TensorSymFunc acc;
  acc.basis = SymBasis::H;
  acc.factor_degrees = multiplicity_profile(mu);
  for (const auto &[rho, c] : h.terms) {
    TensorSymFunc part = psi_h(mu, rho);
    for (const auto &[key, v] : part.terms)
      acc.add(key, c * v);
  }
  TensorSymFunc result = h_to_s(acc);
  std::lock_guard<std::mutex> lock(mu_lock);
  cache.emplace(std::make_pair(mu, lambda), result);
  return result;
}

QPoly GradedDecomp::dimensions() const {
  QPoly d;
  for (const auto &v : degrees)
    d.push_back(dimension(v));
  trim(d);
  return d;
}

BigInt GradedDecomp::character(const ProductClass &c) const {
  BigInt v = 0;
  for (const auto &part : degrees)
    if (!part.is_zero())
      v += character_value(part, c);
  return v;
}

GradedDecomp graded_frobenius(const Partition &mu, const Partition &nu) {
  require_same_size(mu, nu);
  const int n = mu.size();
  GradedDecomp g;
  g.mu = mu;
  g.nu = nu;
  g.factor_degrees = multiplicity_profile(mu);
  auto nd = multiplicity_profile(nu);
  g.factor_degrees.insert(g.factor_degrees.end(), nd.begin(), nd.end());
  g.degrees.resize(std::max(n, 1));
  for (auto &v : g.degrees) {
    v.basis = SymBasis::S;
    v.factor_degrees = g.factor_degrees;
  }
  for (const auto &lambda : enum_partitions(n)) {
    int d = n - lambda.part(0);
    g.degrees[d] += outer(psi_s(mu, lambda), psi_s(nu, lambda));
  }
  while (g.degrees.size() > 1 && g.degrees.back().is_zero())
    g.degrees.pop_back();
  return g;
}

namespace {

// A permutation of the positions of margin `parts` in Stab(parts), whose
// restriction to the positions holding the i-th distinct part (in
// multiplicity_profile order) has cycle type c[i].
std::vector<int> stabilizer_permutation(const Partition &parts,
                                        const ProductClass &c) {
  const auto sizes = distinct_parts_by_multiplicity(parts);
  if (c.size() != sizes.size())
    throw std::invalid_argument("class does not match the stabilizer");
  std::vector<int> perm(parts.length());
  for (std::size_t f = 0; f < sizes.size(); ++f) {
    std::vector<int> pos;
    for (std::size_t r = 0; r < parts.length(); ++r)
      if (parts[r] == sizes[f])
        pos.push_back(static_cast<int>(r));
    if (c[f].size() != static_cast<int>(pos.size()))
      throw std::invalid_argument("class does not match the stabilizer");
    std::size_t at = 0;
    for (int len : c[f].parts()) {
      for (int t = 0; t < len; ++t)
        perm[pos[at + t]] = pos[at + (t + 1) % len];
      at += len;
    }
  }
  return perm;
}

} // namespace

BigInt fixed_tables(const Partition &mu, const Partition &nu,
                    const ProductClass &c_mu, const ProductClass &c_nu) {
  auto sr = stabilizer_permutation(mu, c_mu);
  auto sc = stabilizer_permutation(nu, c_nu);
  BigInt count = 0;
  for_each_contingency(
      WeakComposition(mu.parts()), WeakComposition(nu.parts()),
      [&](const NonnegMatrix &a) {
        for (Eigen::Index i = 0; i < a.rows(); ++i)
          for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(sr[i], sc[j]) != a(i, j))
              return;
        ++count;
      });
  return count;
}

std::vector<int> equivariant_log_concavity_violations(const GradedDecomp &g) {
  std::vector<int> bad;
  for (std::size_t k = 1; k + 1 < g.degrees.size(); ++k) {
    TensorSymFunc outer_pair =
        kronecker_product(g.degrees[k - 1], g.degrees[k + 1]);
    if (!kronecker_dominance(g.degrees[k], outer_pair))
      bad.push_back(static_cast<int>(k));
  }
  return bad;
}

namespace {
BigInt kostka_fast(const Partition &lambda, const WeakComposition &alpha) {
  bool ones = std::all_of(alpha.parts().begin(), alpha.parts().end(),
                          [](int v) { return v == 1; });
  return ones && lambda.size() == alpha.sum() ? f_lambda(lambda)
                                              : kostka(lambda, alpha);
}
} // namespace

QPoly hilbert_kostka(const WeakComposition &alpha, const WeakComposition &beta,
                     int max_degree) {
  if (alpha.sum() != beta.sum())
    throw std::domain_error("row and column sums differ");
  const int n = alpha.sum();
  auto lambdas = max_degree < 0
                     ? enum_partitions(n)
                     : enum_partitions_with_first_at_least(n, n - max_degree);
  QPoly h(n + 1);
  for (const auto &lambda : lambdas) {
    BigInt ka = kostka_fast(lambda, alpha);
    if (ka == 0)
      continue;
    h[n - lambda.part(0)] += ka * kostka_fast(lambda, beta);
  }
  trim(h);
  return h;
}

std::vector<int> log_concavity_report(const QPoly &coeffs) {
  std::vector<int> bad;
  std::size_t lo = 0, hi = coeffs.size();
  while (lo < hi && coeffs[lo] == 0)
    ++lo;
  while (hi > lo && coeffs[hi - 1] == 0)
    --hi;
  for (std::size_t k = lo + 1; k + 1 < hi; ++k)
    if (coeffs[k] * coeffs[k] < coeffs[k - 1] * coeffs[k + 1])
      bad.push_back(static_cast<int>(k));
  return bad;
}

std::vector<QPoly> q_ehrhart(const WeakComposition &alpha,
                             const WeakComposition &beta, int order,
                             bool interior) {
  if (alpha.sum() != beta.sum())
    throw std::domain_error("row and column sums differ");
  if (interior && (alpha.has_zero() || beta.has_zero()))
    throw std::invalid_argument("interior series needs positive parts");
  const int k = static_cast<int>(alpha.length());
  const int p = static_cast<int>(beta.length());
  std::vector<QPoly> out;
  for (int m = 0; m <= order; ++m) {
    std::vector<int> a(k), b(p);
    bool negative = false;
    for (int i = 0; i < k; ++i) {
      a[i] = m * alpha[i] - (interior ? p : 0);
      negative |= a[i] < 0;
    }
    for (int j = 0; j < p; ++j) {
      b[j] = m * beta[j] - (interior ? k : 0);
      negative |= b[j] < 0;
    }
    if (negative) {
      out.emplace_back();
      continue;
    }
    out.push_back(hilbert_kostka(WeakComposition(a), WeakComposition(b)));
  }
  return out;
}

} // namespace ctq
