#pragma once

#include "ctq/monomial.hpp"
#include "ctq/poly.hpp"
#include "ctq/sparse_linalg.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace ctq {

/// Degree-d piece of a homogeneous ideal I = M + (other generators), where
/// M is generated by the monomial generators. Only monomials outside M are
/// tracked as columns; the rows span the image of I_d modulo M.
struct DegreeBasis {
  int degree = 0;
  /// Monomials of degree d outside M, largest first in the term order.
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, int, MonomialHash> column_index;
  SparseEchelon echelon{0};
  /// Leading monomials of I_d that lie outside M, largest first.
  std::vector<Monomial> leading;
  /// Standard monomials of degree d, largest first.
  std::vector<Monomial> standard;
  /// Number of degree-d monomials in M.
  BigInt monomial_part_count = 0;
};

/// Homogeneous ideal with slices computed on demand. Not internally
/// synchronized: call ensure() before sharing across threads, after which
/// the const members are safe to use concurrently.
class Ideal {
public:
  /// Throws std::invalid_argument if a generator is not homogeneous or the
  /// generators live on different grids.
  Ideal(std::vector<Poly> generators, DiagonalOrder order);

  const std::vector<Poly> &generators() const { return generators_; }
  const DiagonalOrder &order() const { return order_; }
  int rows() const { return order_.rows(); }
  int cols() const { return order_.cols(); }

  /// Builds every slice up to degree d.
  void ensure(int d);
  bool has_slice(int d) const;
  /// Throws std::out_of_range if the slice has not been built.
  const DegreeBasis &slice(int d) const;
  const DegreeBasis &slice(int d) {
    ensure(d);
    return std::as_const(*this).slice(d);
  }
  int built_degree() const { return static_cast<int>(slices_.size()) - 1; }

  bool in_monomial_part(const Monomial &m) const;

  /// Remainder of f modulo I, supported on standard monomials. Needs the
  /// slices for every degree of f.
  Poly normal_form(const Poly &f) const;
  bool contains(const Poly &f) const { return normal_form(f).is_zero(); }

private:
  void build_next();

  std::vector<Poly> generators_;
  DiagonalOrder order_;
  std::vector<Monomial> monomial_gens_;
  std::vector<Poly> other_gens_;
  std::vector<DegreeBasis> slices_;
};

DegreeBasis ideal_slice(const std::vector<Poly> &generators, int d,
                        const DiagonalOrder &order);

/// Smallest monomial of f in the term order. Throws for f = 0.
Monomial fin_smallest(const Poly &f, const DiagonalOrder &order);
/// Largest monomial of f in the term order. Throws for f = 0.
Monomial in_largest(const Poly &f, const DiagonalOrder &order);

/// The set of smallest (or largest) monomials of the nonzero elements of
/// span(polys), sorted largest first.
std::vector<Monomial> span_extreme_monomials(const std::vector<Poly> &polys,
                                             const DiagonalOrder &order,
                                             bool largest);

} // namespace ctq
