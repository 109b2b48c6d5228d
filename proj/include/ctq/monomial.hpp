#pragma once

#include "ctq/matrix.hpp"
#include "ctq/partition.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctq {

/// Monomial in the variables x_ij of a rows-by-cols grid, stored as a
/// row-major exponent tuple.
class Monomial {
public:
  Monomial() = default;
  /// The monomial 1.
  Monomial(int rows, int cols)
      : rows_(rows), cols_(cols), exps_(rows * cols, 0) {}
  Monomial(int rows, int cols, std::vector<int> exps);

  template <typename Derived>
  static Monomial from_matrix(const Eigen::MatrixBase<Derived> &a) {
    std::vector<int> e(a.size());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        e[i * a.cols() + j] = static_cast<int>(a(i, j));
    return Monomial(static_cast<int>(a.rows()), static_cast<int>(a.cols()),
                    std::move(e));
  }
  static Monomial variable(int rows, int cols, int i, int j);

  NonnegMatrix to_matrix() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return rows_ * cols_; }
  int operator()(int i, int j) const { return exps_[i * cols_ + j]; }
  int operator[](int v) const { return exps_[v]; }
  int &operator[](int v) { return exps_[v]; }
  const std::vector<int> &exponents() const { return exps_; }
  int degree() const;

  bool divides(const Monomial &other) const;
  Monomial operator*(const Monomial &other) const;
  /// other / this when this divides other.
  std::optional<Monomial> quotient_of(const Monomial &other) const;

  /// Row-major lexicographic order of exponent tuples. Used for
  /// containers only; term orders are separate.
  auto operator<=>(const Monomial &) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const;
};

/// x11^2*x23, or 1.
std::string to_string(const Monomial &m);

/// Diagonal degree: entry q collects the exponents on the antidiagonal
/// i+j-1 = q (1-based), so it has rows+cols-1 entries.
WeakComposition ddeg(const Monomial &m);
WeakComposition rdeg(const Monomial &m);
WeakComposition cdeg(const Monomial &m);

template <typename Derived>
WeakComposition ddeg(const Eigen::MatrixBase<Derived> &a) {
  return ddeg(Monomial::from_matrix(a));
}

/// All monomials of total degree d in a rows-by-cols grid.
std::vector<Monomial> monomials_of_degree(int rows, int cols, int d);

/// Lexicographic term order on a grid where the variables are ranked by
/// i+j, ties broken by smaller row (or by smaller column). Any such order
/// refines the lexicographic order on diagonal degrees. On a single row it
/// is the lex order with x_1 > x_2 > ... .
class DiagonalOrder {
public:
  enum class Tie { Row, Column };

  DiagonalOrder(int rows, int cols, Tie tie = Tie::Row);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Tie tie() const { return tie_; }
  /// Variable indices, most significant first.
  const std::vector<int> &ranking() const { return ranking_; }

  /// Lex on antidiagonal degrees, then lex on exponents in ranking order.
  /// Greater means larger in the term order.
  std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
  bool less(const Monomial &a, const Monomial &b) const {
    return compare(a, b) < 0;
  }

private:
  int rows_;
  int cols_;
  Tie tie_;
  std::vector<int> ranking_;
  // ranking_[diag_start_[s] .. diag_start_[s+1]) lies on antidiagonal s.
  std::vector<int> diag_start_;
};

} // namespace ctq
