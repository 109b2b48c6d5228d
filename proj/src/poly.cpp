#include "ctq/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ctq {

Poly Poly::constant(int rows, int cols, const Rational &c) {
  Poly f(rows, cols);
  f.add_term(Monomial(rows, cols), c);
  return f;
}

Poly Poly::variable(int rows, int cols, int i, int j) {
  return term(Monomial::variable(rows, cols, i, j));
}

Poly Poly::term(const Monomial &m, const Rational &c) {
  Poly f(m.rows(), m.cols());
  f.add_term(m, c);
  return f;
}

int Poly::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto &[m, c] : terms_) {
    if (d >= 0 && m.degree() != d)
      return false;
    d = m.degree();
  }
  return true;
}

Rational Poly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial &m, const Rational &c) {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw std::invalid_argument("monomial on a different grid");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void Poly::check_grid(const Poly &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("polynomials on different grids");
}

Poly &Poly::operator+=(const Poly &o) {
  check_grid(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  check_grid(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Poly &Poly::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_)
    v *= c;
  return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
  a.check_grid(b);
  Poly r(a.rows_, a.cols_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_)
      r.add_term(ma * mb, ca * cb);
  return r;
}

Poly operator*(const Poly &a, const Monomial &m) {
  Poly r(a.rows_, a.cols_);
  for (const auto &[ma, ca] : a.terms_)
    r.terms_.emplace(ma * m, ca);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0)
    throw std::invalid_argument("negative power");
  Poly r = constant(rows_, cols_, 1);
  for (int t = 0; t < e; ++t)
    r = r * *this;
  return r;
}

Poly Poly::derivative(int i, int j) const {
  Poly r(rows_, cols_);
  int v = i * cols_ + j;
  for (const auto &[m, c] : terms_) {
    int e = m[v];
    if (e == 0)
      continue;
    Monomial d = m;
    d[v] = e - 1;
    r.terms_.emplace(std::move(d), c * e);
  }
  return r;
}

Poly Poly::homogeneous_component(int d) const {
  Poly r(rows_, cols_);
  for (const auto &[m, c] : terms_)
    if (m.degree() == d)
      r.terms_.emplace(m, c);
  return r;
}

Poly Poly::top_component() const { return homogeneous_component(degree()); }

Rational Poly::evaluate(const NonnegMatrix &point) const {
  if (point.rows() != rows_ || point.cols() != cols_)
    throw std::invalid_argument("evaluation point has the wrong shape");
  Rational total = 0;
  for (const auto &[m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < rows_ && t != 0; ++i)
      for (int j = 0; j < cols_; ++j)
        for (int e = 0; e < m(i, j); ++e)
          t *= point(i, j);
    total += t;
  }
  return total;
}

std::string to_string(const Poly &f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto &[m, c] = *it;
    Rational a = c;
    if (!first)
      os << (a < 0 ? " - " : " + ");
    else if (a < 0)
      os << '-';
    if (a < 0)
      a = -a;
    bool unit = m.degree() == 0;
    if (a != 1 || unit)
      os << a.str() << (unit ? "" : "*");
    if (!unit)
      os << to_string(m);
    first = false;
  }
  return os.str();
}

} // namespace ctq
