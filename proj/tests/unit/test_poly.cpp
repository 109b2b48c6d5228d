#include "ctq/ideal.hpp"
#include "ctq/one_row.hpp"
#include "ctq/operators.hpp"
#include "ctq/sparse_linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

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

Poly x(int rows, int cols, int i, int j) {
  return Poly::variable(rows, cols, i, j);
}

Poly random_poly(std::mt19937 &rng, int rows, int cols, int terms, int deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto mons = monomials_of_degree(rows, cols, deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  Poly f(rows, cols);
  for (int t = 0; t < terms; ++t)
    f.add_term(mons[pick(rng)], coef(rng));
  return f;
}

// Expands rho^m by repeated application.
Poly polarize_power(Poly f, int from, int to, int m) {
  for (int t = 0; t < m; ++t)
    f = polarize_row(f, from, to);
  return f;
}

} // namespace

TEST(Monomial, Degrees) {
  NonnegMatrix a = mat({{1, 2, 0, 1}, {0, 2, 0, 1}, {3, 0, 1, 1}});
  Monomial m = Monomial::from_matrix(a);
  EXPECT_EQ(ddeg(m), WeakComposition({1, 2, 5, 1, 2, 1}));
  EXPECT_EQ(rdeg(m), WeakComposition({4, 3, 5}));
  EXPECT_EQ(cdeg(m), WeakComposition({4, 4, 1, 3}));
  EXPECT_EQ(m.degree(), 12);
  EXPECT_EQ(m.to_matrix(), a);
  EXPECT_EQ(to_string(Monomial::variable(2, 3, 1, 2)), "x2,3");
  EXPECT_EQ(to_string(Monomial(2, 2)), "1");
}

TEST(Monomial, Arithmetic) {
  Monomial a = Monomial::from_matrix(mat({{1, 0}, {2, 1}}));
  Monomial b = Monomial::from_matrix(mat({{1, 1}, {2, 1}}));
  EXPECT_TRUE(a.divides(b));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(*a.quotient_of(b), Monomial::variable(2, 2, 0, 1));
  EXPECT_FALSE(b.quotient_of(a).has_value());
  EXPECT_EQ(a * Monomial::variable(2, 2, 0, 1), b);
  // Stars and bars: C(d + v - 1, v - 1).
  EXPECT_EQ(monomials_of_degree(2, 3, 3).size(), 56u);
  EXPECT_EQ(monomials_of_degree(3, 3, 0).size(), 1u);
}

TEST(DiagonalOrder, Goldens) {
  DiagonalOrder ord(3, 3);
  auto v = [](int i, int j) { return Monomial::variable(3, 3, i, j); };
  EXPECT_TRUE(ord.compare(v(0, 0), v(1, 1)) > 0);
  DiagonalOrder row(1, 3);
  auto r = [](int j) { return Monomial::variable(1, 3, 0, j); };
  EXPECT_TRUE(row.compare(r(0), r(1)) > 0);
  EXPECT_TRUE(row.compare(r(1), r(2)) > 0);
  // Ties on an antidiagonal: smaller row first, or smaller column first.
  EXPECT_TRUE(ord.compare(v(0, 1), v(1, 0)) > 0);
  DiagonalOrder col(3, 3, DiagonalOrder::Tie::Column);
  EXPECT_TRUE(col.compare(v(0, 1), v(1, 0)) < 0);
}

TEST(DiagonalOrder, TermOrderAxiomsAndDiagonalProperty) {
  std::mt19937 rng(5);
  for (auto tie : {DiagonalOrder::Tie::Row, DiagonalOrder::Tie::Column}) {
    DiagonalOrder ord(3, 4, tie);
    auto all = monomials_of_degree(3, 4, 2);
    auto three = monomials_of_degree(3, 4, 3);
    all.insert(all.end(), three.begin(), three.end());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    Monomial one(3, 4);
    for (int t = 0; t < 3000; ++t) {
      const Monomial &a = all[pick(rng)], &b = all[pick(rng)],
                     &c = all[pick(rng)];
      auto ab = ord.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
      EXPECT_EQ(ord.compare(a * c, b * c), ab);
      EXPECT_TRUE(ord.compare(a, one) > 0);
      auto da = ddeg(a).parts(), db = ddeg(b).parts();
      if (da != db) {
        EXPECT_EQ(ab, da <=> db);
      }
    }
  }
}

TEST(Poly, ArithmeticAndEvaluation) {
  Poly f = x(1, 2, 0, 0) + x(1, 2, 0, 1);
  Poly g = f * f;
  EXPECT_EQ(g, f.pow(2));
  EXPECT_EQ(g.coefficient(Monomial::from_matrix(mat({{1, 1}}))), 2);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(g.evaluate(mat({{2, 3}})), 25);
  EXPECT_EQ(g.derivative(0, 0), f * Rational(2));
  Poly h = g + x(1, 2, 0, 0);
  EXPECT_FALSE(h.is_homogeneous());
  EXPECT_EQ(h.top_component(), g);
  EXPECT_EQ(h.homogeneous_component(1), x(1, 2, 0, 0));
  EXPECT_THROW(x(1, 2, 0, 0) + x(2, 1, 0, 0), std::invalid_argument);
}

TEST(ApplyDiff, Examples) {
  Poly x1 = x(1, 3, 0, 0), x2 = x(1, 3, 0, 1), x3 = x(1, 3, 0, 2);
  EXPECT_EQ(apply_diff(x1, x1 * x1), x1 * Rational(2));
  EXPECT_TRUE(apply_diff(x1 + x2 + x3, (x1 - x2) * (x2 - x3)).is_zero());
  // x1^2 kills f_T when T holds at most one 1.
  TwoRowTableau t{{1, 2}, {2, 3}};
  EXPECT_TRUE(apply_diff(x1 * x1, f_T_poly(t, 3)).is_zero());
}

TEST(ApplyDiff, Linearity) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    Poly f = random_poly(rng, 2, 2, 3, 1), g = random_poly(rng, 2, 2, 4, 3),
         h = random_poly(rng, 2, 2, 4, 3);
    EXPECT_EQ(apply_diff(f, g + h), apply_diff(f, g) + apply_diff(f, h));
    // On a product of distinct variables each partial hits one factor.
    Poly p = x(2, 2, 0, 0) * x(2, 2, 1, 1);
    EXPECT_EQ(apply_diff(x(2, 2, 0, 0), p * g),
              x(2, 2, 1, 1) * g + p * apply_diff(x(2, 2, 0, 0), g));
  }
}

TEST(Polarization, Counterexample) {
  auto v = [](int i, int j) { return x(3, 3, i - 1, j - 1); };
  Poly f = v(1, 2) * v(3, 3) + v(1, 3) * v(3, 1);
  EXPECT_EQ(polarize_row(f, 2, 0), v(1, 2) * v(1, 3) + v(1, 3) * v(1, 1));
  EXPECT_TRUE(polarize_row(Poly::constant(3, 3, 5), 1, 0).is_zero());
}

TEST(Polarization, IsADerivationAndShiftsRowDegree) {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    Poly f = random_poly(rng, 3, 2, 3, 2), g = random_poly(rng, 3, 2, 3, 2);
    EXPECT_EQ(polarize_row(f * g, 2, 0),
              f * polarize_row(g, 2, 0) + g * polarize_row(f, 2, 0));
    EXPECT_EQ(polarize_col(f * g, 1, 0),
              f * polarize_col(g, 1, 0) + g * polarize_col(f, 1, 0));
  }
  Monomial m = Monomial::from_matrix(mat({{1, 0}, {0, 2}, {1, 1}}));
  Poly moved = polarize_row(Poly::term(m), 2, 0);
  EXPECT_FALSE(moved.is_zero());
  for (const auto &[mono, c] : moved.terms()) {
    EXPECT_EQ(rdeg(mono), WeakComposition({2, 2, 1}));
    (void)c;
  }
}

TEST(Shift, Goldens) {
  NonnegMatrix a = mat({{0, 2, 1, 3, 1}, {2, 0, 1, 1, 0}, {0, 3, 1, 2, 1},
                        {1, 0, 2, 1, 0}});
  EXPECT_EQ(shift_row(a, 3, 1, 1), mat({{0, 2, 1, 3, 1}, {3, 0, 1, 1, 0},
                                        {0, 3, 1, 2, 1}, {0, 0, 2, 1, 0}}));
  EXPECT_EQ(shift_row(a, 3, 1, 2), mat({{0, 2, 1, 3, 1}, {3, 0, 2, 1, 0},
                                        {0, 3, 1, 2, 1}, {0, 0, 1, 1, 0}}));
  EXPECT_EQ(shift_row(a, 3, 1, 3), mat({{0, 2, 1, 3, 1}, {3, 0, 3, 1, 0},
                                        {0, 3, 1, 2, 1}, {0, 0, 0, 1, 0}}));
  EXPECT_EQ(shift_row(a, 3, 1, 0), a);
  EXPECT_THROW(shift_row(a, 3, 1, 5), std::invalid_argument);
  NonnegMatrix at = a.transpose();
  EXPECT_EQ(shift_col(at, 3, 1, 2), NonnegMatrix(shift_row(a, 3, 1, 2).transpose()));
}

TEST(Split, Goldens) {
  WeakComposition d{0, 0, 0, 2, 1, 0, 3};
  EXPECT_EQ(split_left(d, 2, 1), WeakComposition({0, 1, 0, 1, 1, 0, 3}));
  EXPECT_EQ(split_left(d, 2, 2), WeakComposition({0, 2, 0, 0, 1, 0, 3}));
  EXPECT_EQ(split_left(d, 2, 3), WeakComposition({0, 2, 1, 0, 0, 0, 3}));
  EXPECT_EQ(split_left(d, 2, 4), WeakComposition({0, 2, 1, 0, 1, 0, 2}));
  EXPECT_EQ(split_left(d, 2, 5), WeakComposition({0, 2, 1, 0, 2, 0, 1}));
  EXPECT_EQ(split_left(d, 2, 6), WeakComposition({0, 2, 1, 0, 3, 0, 0}));
  EXPECT_EQ(split_left(d, 2, 0), d);
  EXPECT_THROW(split_left(d, 4, 1), std::invalid_argument);
  EXPECT_THROW(split_left(d, 2, 7), std::invalid_argument);
}

TEST(Merge, Goldens) {
  NonnegMatrix a = mat({{0, 0, 0, 0}, {1, 2, 1, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}});
  NonnegMatrix m = merge_row(a);
  EXPECT_EQ(m, mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 2, 3, 1}, {0, 0, 0, 1}}));
  EXPECT_TRUE(is_zigzag_matrix(m));
  EXPECT_EQ(shift_row(m, 2, 1, 4), a);
  EXPECT_EQ(merge_row(mat({{1, 0}, {0, 1}})), mat({{0, 0}, {1, 1}}));
  EXPECT_THROW(merge_row(mat({{0, 1}, {1, 0}})), std::invalid_argument);
  EXPECT_THROW(merge_row(mat({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST(Polarization, LeadingTermIsShiftSmallCase) {
  DiagonalOrder ord(3, 3);
  for (int d = 1; d <= 3; ++d)
    for (const auto &m : monomials_of_degree(3, 3, d))
      for (int i1 = 1; i1 < 3; ++i1)
        for (int i0 = 0; i0 < i1; ++i0) {
          int r = rdeg(m)[i1];
          for (int k = 0; k <= r; ++k) {
            Poly f = polarize_power(Poly::term(m), i1, i0, k);
            ASSERT_FALSE(f.is_zero());
            EXPECT_EQ(in_largest(f, ord),
                      Monomial::from_matrix(shift_row(m.to_matrix(), i1, i0, k)));
          }
        }
}

TEST(SparseEchelon, RankAndReduction) {
  SparseEchelon e(3);
  EXPECT_TRUE(e.insert({{0, 1}, {1, 1}}));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.insert({{0, 1}, {2, -1}}));
  EXPECT_EQ(e.rank(), 2);
  EXPECT_EQ(e.pivot_columns(), (std::vector<int>{0, 1}));
  auto r = e.reduce({{0, Rational(1)}});
  // x0 = -x1 = x2 modulo the rows.
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.at(2), 1);
  auto rr = e.reduced_rows();
  ASSERT_EQ(rr.size(), 2u);
}

TEST(SparseEchelon, ExactRankMatchesRationalElimination) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 100; ++t) {
    int k = 1 + t % 5, p = 1 + (t / 5) % 5;
    Matrix<BigInt> m(k, p);
    SparseEchelon e(p);
    for (int i = 0; i < k; ++i) {
      SparseRow<BigInt> row;
      for (int j = 0; j < p; ++j) {
        m(i, j) = d(rng);
        if (m(i, j) != 0)
          row.emplace_back(j, m(i, j));
      }
      e.insert(row);
    }
    EXPECT_EQ(exact_rank(m), e.rank());
    Matrix<Rational> q = m.cast<Rational>() * Rational(1, 3);
    EXPECT_EQ(exact_rank(q), e.rank());
  }
}

TEST(IdealSlice, Goldens) {
  DiagonalOrder ord(1, 2);
  DegreeBasis s = ideal_slice({x(1, 2, 0, 0) + x(1, 2, 0, 1)}, 1, ord);
  EXPECT_EQ(s.leading, std::vector<Monomial>{Monomial::variable(1, 2, 0, 0)});
  EXPECT_EQ(s.standard, std::vector<Monomial>{Monomial::variable(1, 2, 0, 1)});
  EXPECT_THROW(Ideal({x(1, 2, 0, 0) + x(1, 2, 0, 0) * x(1, 2, 0, 1)}, ord),
               std::invalid_argument);
}

TEST(NormalForm, Properties) {
  OneRowSpec spec{WeakComposition{1, 2, 1}};
  Ideal ideal(generators_one_row(spec), DiagonalOrder(1, 3));
  ideal.ensure(4);
  for (const auto &g : ideal.generators())
    EXPECT_TRUE(ideal.normal_form(g).is_zero());
  Poly std2 = Poly::term(Monomial::from_matrix(mat({{0, 1, 1}})));
  EXPECT_EQ(ideal.normal_form(std2), std2);
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    Poly f = random_poly(rng, 1, 3, 4, 2), g = random_poly(rng, 1, 3, 4, 2);
    Poly nf = ideal.normal_form(f);
    for (const auto &[m, c] : nf.terms()) {
      const auto &st = ideal.slice(2).standard;
      EXPECT_NE(std::find(st.begin(), st.end(), m), st.end());
      (void)c;
    }
    EXPECT_TRUE(ideal.contains(f - nf));
    EXPECT_EQ(ideal.normal_form(f + g), nf + ideal.normal_form(g));
  }
  EXPECT_THROW(ideal.normal_form(Poly::term(Monomial::from_matrix(mat({{0, 0, 6}})))),
               std::out_of_range);
}

TEST(ExtremeMonomials, Goldens) {
  DiagonalOrder ord(1, 3);
  Poly x1 = x(1, 3, 0, 0), x2 = x(1, 3, 0, 1), x3 = x(1, 3, 0, 2);
  Poly f = (x1 - x2) * (x2 - x3);
  EXPECT_EQ(fin_smallest(f, ord), Monomial::from_matrix(mat({{0, 1, 1}})));
  EXPECT_EQ(in_largest(f, ord), Monomial::from_matrix(mat({{1, 1, 0}})));
  Monomial m = Monomial::from_matrix(mat({{2, 0, 1}}));
  EXPECT_EQ(fin_smallest(Poly::term(m), ord), m);
  EXPECT_THROW(fin_smallest(Poly(1, 3), ord), std::invalid_argument);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    Poly g = random_poly(rng, 1, 3, 5, 3);
    if (g.is_zero())
      continue;
    Monomial lo = fin_smallest(g, ord), hi = in_largest(g, ord);
    for (const auto &[mm, c] : g.terms()) {
      EXPECT_TRUE(ord.compare(lo, mm) <= 0);
      EXPECT_TRUE(ord.compare(hi, mm) >= 0);
      (void)c;
    }
  }
}
