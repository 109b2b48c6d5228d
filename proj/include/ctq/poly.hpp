#pragma once

#include "ctq/monomial.hpp"
#include "ctq/numeric.hpp"

#include <map>
#include <string>

namespace ctq {

/// Sparse polynomial with rational coefficients in the variables of a
/// rows-by-cols grid. Zero coefficients are never stored.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(int rows, int cols) : rows_(rows), cols_(cols) {}

  static Poly constant(int rows, int cols, const Rational &c);
  static Poly variable(int rows, int cols, int i, int j);
  static Poly term(const Monomial &m, const Rational &c = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial &m) const;

  /// Adds c * m.
  void add_term(const Monomial &m, const Rational &c);

  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  Poly &operator*=(const Rational &c);
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
  friend Poly operator*(const Poly &a, const Poly &b);
  friend Poly operator*(const Poly &a, const Monomial &m);
  bool operator==(const Poly &o) const { return terms_ == o.terms_; }

  Poly pow(int e) const;
  /// Partial derivative with respect to x_ij.
  Poly derivative(int i, int j) const;
  /// Degree-d part.
  Poly homogeneous_component(int d) const;
  /// Highest-degree part.
  Poly top_component() const;
  Rational evaluate(const NonnegMatrix &point) const;

private:
  void check_grid(const Poly &o) const;

  int rows_ = 0;
  int cols_ = 0;
  TermMap terms_;
};

std::string to_string(const Poly &f);

} // namespace ctq
