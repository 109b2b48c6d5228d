#pragma once

#include "ctq/ideal.hpp"
#include "ctq/matrix.hpp"
#include "ctq/numeric.hpp"

#include <memory>
#include <set>
#include <vector>

namespace ctq {

/// Row sums, column sums, every monomial of degree alpha_i+1 in row i and
/// every monomial of degree beta_j+1 in column j. Duplicates removed.
std::vector<Poly> generators_contingency(const WeakComposition &alpha,
                                         const WeakComposition &beta);
/// Column sums and row monomials of degree alpha_i+1 (p columns).
std::vector<Poly> generators_colsum(const WeakComposition &alpha, int p);
/// Row sums and column monomials of degree beta_j+1 (k rows).
std::vector<Poly> generators_rowsum(const WeakComposition &beta, int k);

/// Quotient by the contingency ideal with its standard monomial data.
struct QuotientModel {
  WeakComposition alpha;
  WeakComposition beta;
  std::shared_ptr<Ideal> ideal;
  /// Degree of the last nonzero slice; the next slice is checked empty.
  int top_degree = 0;
  std::set<Monomial> standard;
  QPoly hilbert;
};

/// Standard monomials under the diagonal order, computed degree by degree
/// until their count reaches the number of tables, then one degree further
/// to confirm the quotient stops. Throws std::domain_error if the sums
/// differ, std::runtime_error if the count overshoots or the cap n+1 is
/// passed.
QuotientModel build_quotient(const WeakComposition &alpha,
                             const WeakComposition &beta,
                             DiagonalOrder::Tie tie = DiagonalOrder::Tie::Row);

std::set<Monomial> standard_basis(const WeakComposition &alpha,
                                  const WeakComposition &beta);
/// {x^{mb(A)} : A with margins alpha, beta}.
std::set<Monomial> mb_monomials(const WeakComposition &alpha,
                                const WeakComposition &beta);

QPoly hilbert_linear_algebra(const WeakComposition &alpha,
                             const WeakComposition &beta);
/// sum over tables of q^{n - zigzag(A)}.
QPoly hilbert_zigzag(const WeakComposition &alpha, const WeakComposition &beta);
BigInt count_contingency(const WeakComposition &alpha,
                         const WeakComposition &beta);

/// Sum of x_ij over the blocks (i,j) whose row interval and column interval
/// share a diagonal position.
Poly lefschetz_element(const WeakComposition &alpha,
                       const WeakComposition &beta);

struct LefschetzEntry {
  int k = 0;
  int power = 0;
  int source_dim = 0;
  int target_dim = 0;
  int rank = 0;
  bool injective = false;
};

struct LefschetzReport {
  int n = 0;
  int min_zigzag = 0;
  std::vector<LefschetzEntry> entries;

  bool all_injective() const;
};

/// For m the smallest zigzag number and each k with 2k <= n-m, the rank of
/// multiplication by L^{n-m-2k} from degree k to degree n-m-k.
LefschetzReport lefschetz_check(const QuotientModel &model);
LefschetzReport lefschetz_check(const WeakComposition &alpha,
                                const WeakComposition &beta);

struct GrIdealReport {
  /// Number of lifts checked, and how many failed to vanish on some table.
  int lifts_checked = 0;
  int lifts_failed = 0;
  /// Lifts whose top-degree part is not the generator.
  int top_mismatch = 0;
  BigInt tables = 0;
  BigInt quotient_dimension = 0;

  bool ok() const {
    return lifts_failed == 0 && top_mismatch == 0 &&
           tables == quotient_dimension;
  }
};

/// Lifts of each generator to polynomials vanishing on the tables (row sum
/// minus alpha_i, column sum minus beta_j, products of falling factorials),
/// plus the dimension count.
GrIdealReport verify_gr_ideal(const WeakComposition &alpha,
                              const WeakComposition &beta);
GrIdealReport verify_gr_ideal(const QuotientModel &model);

} // namespace ctq
