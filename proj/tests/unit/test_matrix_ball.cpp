#include "ctq/matrix_ball.hpp"
#include "ctq/monomial.hpp"
#include "ctq/tableau.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace ctq;

namespace {

NonnegMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  NonnegMatrix a(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto &r : rows) {
    int j = 0;
    for (int v : r)
      a(i, j++) = v;
    ++i;
  }
  return a;
}

const NonnegMatrix &example_a() {
  static const NonnegMatrix a = mat({{1, 2, 0, 1}, {0, 0, 2, 1}, {3, 0, 1, 1}});
  return a;
}

NonnegMatrix random_matrix(std::mt19937 &rng, int k, int p, int max) {
  std::uniform_int_distribution<int> d(0, max);
  NonnegMatrix a(k, p);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < p; ++j)
      a(i, j) = d(rng);
  return a;
}

// Maximum weight over every subset of cells that is a zigzag.
int brute_zigzag(const NonnegMatrix &a) {
  std::vector<Cell> cells;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      cells.emplace_back(i, j);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
    std::vector<Cell> z;
    for (std::size_t t = 0; t < cells.size(); ++t)
      if (mask >> t & 1u)
        z.push_back(cells[t]);
    if (is_zigzag_set(z))
      best = std::max(best, weight(a, z));
  }
  return best;
}

// Classical RSK by row insertion of the two-line array (row i, column j),
// sorted lexicographically: columns are inserted, rows recorded.
std::pair<Tableau, Tableau> insertion_rsk(const NonnegMatrix &a) {
  std::vector<std::vector<int>> p, q;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int c = 0; c < a(i, j); ++c) {
        int x = j + 1;
        std::size_t r = 0;
        for (;; ++r) {
          if (r == p.size()) {
            p.push_back({x});
            q.push_back({i + 1});
            break;
          }
          auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
          if (it == p[r].end()) {
            p[r].push_back(x);
            q[r].push_back(i + 1);
            break;
          }
          std::swap(*it, x);
        }
      }
  return {Tableau(p), Tableau(q)};
}

// Longest weakly increasing subsequence.
int lis(const std::vector<int> &w) {
  std::vector<int> best(w.size(), 1);
  int m = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] <= w[i])
        best[i] = std::max(best[i], best[j] + 1);
    m = std::max(m, best[i]);
  }
  return m;
}

std::vector<WeakComposition> comps_upto(int n, int max_len) {
  std::vector<WeakComposition> out;
  for (int len = 1; len <= max_len; ++len)
    for (const auto &c : enum_weak_compositions(n, len))
      out.push_back(c);
  return out;
}

} // namespace

TEST(Zigzag, GoldenMatrix) {
  EXPECT_EQ(zigzag_number(example_a()), 7);
  std::vector<Cell> w1{{0, 0}, {0, 1}, {1, 2}, {2, 2}, {2, 3}};
  std::vector<Cell> w2{{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto &w : {w1, w2}) {
    EXPECT_TRUE(is_zigzag_set(w));
    EXPECT_EQ(weight(example_a(), w), 7);
  }
  auto z = zigzag_witness(example_a());
  EXPECT_TRUE(z == w1 || z == w2);
}

TEST(Zigzag, MatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + trial % 3, p = 1 + (trial / 3) % 4;
    NonnegMatrix a = random_matrix(rng, k, p, 3);
    EXPECT_EQ(zigzag_number(a), brute_zigzag(a)) << a;
    if (support(a).empty())
      continue;
    auto z = zigzag_witness(a);
    EXPECT_TRUE(is_zigzag_set(z));
    EXPECT_EQ(weight(a, z), zigzag_number(a));
  }
}

TEST(Zigzag, PermutationIsLongestIncreasingSubsequence) {
  std::vector<int> w{1, 2, 3, 4, 5, 6};
  do {
    NonnegMatrix a = NonnegMatrix::Zero(6, 6);
    for (int j = 0; j < 6; ++j)
      a(w[j] - 1, j) = 1;
    // Reading columns left to right gives w; a zigzag is an increasing run.
    EXPECT_EQ(zigzag_number(a), lis(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Zigzag, SetPredicate) {
  EXPECT_TRUE(is_zigzag_set({}));
  EXPECT_TRUE(is_zigzag_set({{0, 1}, {0, 2}, {2, 2}}));
  EXPECT_FALSE(is_zigzag_set({{0, 2}, {1, 1}}));
  EXPECT_TRUE(is_zigzag_matrix(mat({{1, 2, 1}, {0, 0, 3}})));
  EXPECT_FALSE(is_zigzag_matrix(mat({{0, 1}, {1, 0}})));
}

TEST(BallLabels, GoldenDiagram) {
  BallDiagram d = label_balls(example_a());
  EXPECT_EQ(d.max_label, 7);
  EXPECT_EQ(d.first_label(2, 0), 2);
  EXPECT_EQ(d.last_label(2, 0), 4);
  EXPECT_EQ(d.first_label(2, 3), 7);
  EXPECT_EQ(d.last_label(2, 3), 7);
  // Cell (2,3) starts at 4, not 5.
  EXPECT_EQ(d.first_label(1, 2), 4);
  EXPECT_EQ(d.first_label(0, 0), 1);
  EXPECT_EQ(d.first_label(0, 3), 4);
  EXPECT_THROW(label_balls(mat({{1, -1}})), std::invalid_argument);
}

TEST(OneStep, GoldenMatrix) {
  auto s = one_step(example_a());
  EXPECT_EQ(s.next, mat({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 2, 1, 1}}));
  EXPECT_EQ(s.x, (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(s.y, (std::vector<int>{4, 0, 2, 1}));
  EXPECT_EQ(one_step(s.next).next,
            mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}));
  auto z = one_step(NonnegMatrix::Zero(2, 3).eval());
  EXPECT_TRUE(support(z.next).empty());
  EXPECT_EQ(z.x, (std::vector<int>{0, 0}));
}

TEST(OneStep, MarginsDecrease) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    NonnegMatrix a = random_matrix(rng, 3, 4, 2);
    if (support(a).empty())
      continue;
    NonnegMatrix b = one_step(a).next;
    auto ra = row_sums(a), rb = row_sums(b), ca = col_sums(a), cb = col_sums(b);
    for (std::size_t i = 0; i < ra.length(); ++i)
      EXPECT_LE(rb[i], ra[i]);
    for (std::size_t j = 0; j < ca.length(); ++j)
      EXPECT_LE(cb[j], ca[j]);
    EXPECT_LT(rb.sum(), ra.sum());
  }
}

TEST(Rsk, GoldenMatrix) {
  RskPair r = rsk(example_a());
  EXPECT_EQ(r.p, Tableau({{1, 1, 1, 1, 2, 2, 3}, {2, 3, 3, 3}, {3}}));
  EXPECT_EQ(r.q, Tableau({{1, 1, 1, 1, 3, 3, 4}, {2, 2, 3, 4}, {4}}));
}

TEST(Rsk, SingleCell) {
  RskPair r = rsk(mat({{3}}));
  EXPECT_EQ(r.p, Tableau({{1, 1, 1}}));
  EXPECT_EQ(r.q, Tableau({{1, 1, 1}}));
}

TEST(Rsk, MatchesRowInsertion) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    NonnegMatrix a = random_matrix(rng, 1 + trial % 4, 1 + trial % 5, 2);
    RskPair r = rsk(a);
    auto [pc, qc] = insertion_rsk(a);
    // Row insertion of columns records rows, so the roles swap.
    EXPECT_EQ(r.p, qc) << a;
    EXPECT_EQ(r.q, pc) << a;
  }
}

TEST(Rsk, BijectionOntoTableauPairs) {
  for (int n = 0; n <= 6; ++n) {
    auto comps = comps_upto(n, n <= 5 ? 3 : 2);
    for (const auto &alpha : comps)
      for (const auto &beta : comps) {
        std::set<std::pair<Tableau, Tableau>> seen;
        BigInt pairs = 0;
        for (const auto &lambda : enum_partitions(n))
          pairs += kostka(lambda, alpha) * kostka(lambda, beta);
        for (const auto &a : enum_contingency(alpha, beta)) {
          RskPair r = rsk(a);
          EXPECT_TRUE(r.p.is_semistandard());
          EXPECT_TRUE(r.q.is_semistandard());
          EXPECT_EQ(r.p.shape(), r.q.shape());
          EXPECT_EQ(r.p.content(alpha.length()), alpha);
          EXPECT_EQ(r.q.content(beta.length()), beta);
          EXPECT_EQ(r.p.shape().part(0), zigzag_number(a));
          seen.emplace(r.p, r.q);
        }
        EXPECT_EQ(BigInt(seen.size()), pairs)
            << to_string(alpha) << " " << to_string(beta);
      }
  }
}

TEST(Mb, Goldens) {
  EXPECT_TRUE(support(mb(mat({{2, 1, 0}, {0, 1, 1}}))).empty());
  EXPECT_EQ(mb(mat({{0, 2, 1}, {2, 0, 0}})), mat({{0, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(mb(mat({{1, 1, 1}, {1, 1, 0}})), mat({{0, 0, 0}, {0, 1, 1}}));
}

TEST(Mb, DegreeAndSubtingency) {
  for (const auto &alpha : comps_upto(5, 3))
    for (const auto &beta : comps_upto(5, 3))
      for (const auto &a : enum_contingency(alpha, beta)) {
        NonnegMatrix b = mb(a);
        EXPECT_EQ(b.sum(), 5 - zigzag_number(a));
        EXPECT_TRUE(is_subtingency(b, alpha, beta));
      }
}

TEST(MbImage, Golden) {
  NonnegMatrix b = mat({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 2, 0, 1}});
  auto s = one_step(b);
  EXPECT_EQ(s.x, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.y, (std::vector<int>{0, 2, 0, 1}));
  EXPECT_FALSE(is_mb_image(b, WeakComposition{2, 3, 2},
                           WeakComposition{2, 2, 0, 3}));
  EXPECT_THROW(is_mb_image(b, WeakComposition{2, 5}, WeakComposition{2, 2, 0, 3}),
               std::invalid_argument);
}

TEST(MbImage, MatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    auto comps = comps_upto(n, 3);
    for (const auto &alpha : comps)
      for (const auto &beta : comps) {
        std::set<Monomial> image;
        for (const auto &a : enum_contingency(alpha, beta))
          image.insert(Monomial::from_matrix(mb(a)));
        // Every subtingency table of total below n.
        for (int s = 0; s < n; ++s)
          for (const auto &ra : enum_weak_compositions(s, alpha.length()))
            for (const auto &cb : enum_weak_compositions(s, beta.length())) {
              bool fits = true;
              for (std::size_t i = 0; i < ra.length(); ++i)
                fits &= ra[i] <= alpha[i];
              for (std::size_t j = 0; j < cb.length(); ++j)
                fits &= cb[j] <= beta[j];
              if (!fits)
                continue;
              for (const auto &b : enum_contingency(ra, cb))
                EXPECT_EQ(is_mb_image(b, alpha, beta),
                          image.count(Monomial::from_matrix(b)) > 0)
                    << to_string(alpha) << " " << to_string(beta) << "\n"
                    << b;
            }
      }
  }
}

TEST(Templates, BigIntScalar) {
  Matrix<BigInt> a(2, 2);
  BigInt huge("123456789012345678901234567890");
  a << huge, huge, BigInt(0), huge;
  EXPECT_EQ(zigzag_number(a), huge * 3);
  Matrix<BigInt> small = example_a().cast<BigInt>();
  EXPECT_EQ(zigzag_number(small), 7);
  EXPECT_EQ(mb(small), one_step(example_a()).next.cast<BigInt>());
  EXPECT_EQ(rsk(small).p, rsk(example_a()).p);
}
