#pragma once

#include "ctq/numeric.hpp"
#include "ctq/partition.hpp"
#include "ctq/poly.hpp"

#include <optional>
#include <vector>

namespace ctq {

/// The ring F[x_1..x_n] / (x_1^{d_1+1}, ..., x_n^{d_n+1}, x_1+...+x_n).
struct OneRowSpec {
  WeakComposition d;

  int n() const { return static_cast<int>(d.length()); }
  int total() const { return d.sum(); }
};

/// Two-row rectangular tableau with strictly increasing columns. Entries
/// are 1-based.
struct TwoRowTableau {
  std::vector<int> first;
  std::vector<int> second;

  std::size_t columns() const { return first.size(); }
  auto operator<=>(const TwoRowTableau &) const = default;
};

/// Generators on the 1-by-n grid, duplicates removed.
std::vector<Poly> generators_one_row(const OneRowSpec &spec);

/// trunc_{<= d/2} of (1-q) prod_i (1 + q + ... + q^{d_i}).
QPoly one_row_hilbert(const OneRowSpec &spec);

/// Every two-row rectangular SSYT with at most d_i copies of i.
std::vector<TwoRowTableau> enum_Td(const OneRowSpec &spec);

struct OneRowCounts {
  BigInt dimension;
  std::size_t first_rows = 0;
  std::size_t second_rows = 0;

  bool all_equal() const {
    return dimension == BigInt(first_rows) && dimension == BigInt(second_rows);
  }
};
OneRowCounts counts_match(const OneRowSpec &spec);

/// Copies of i in the first row, i = 1..n.
WeakComposition phi_map(const TwoRowTableau &t, int n);

/// Result of the dotting procedure on a composition beta <= d. Working from
/// the right, each i places beta_i dots on the nearest unsaturated entries
/// strictly to its right; entry j is saturated once beta_j plus its dots
/// reaches d_j.
struct Dotting {
  std::vector<int> dots;
  /// (i, j) pairs, one per dot placed by i on j, 1-based.
  std::vector<std::pair<int, int>> columns;
  /// Entries i (1-based) that could not place all beta_i dots.
  std::vector<int> unsatisfied;
};
Dotting dot_composition(const WeakComposition &beta, const OneRowSpec &spec);

/// Increments the rightmost unsaturated entry after dotting. Throws
/// std::invalid_argument unless beta <= d and 2 (sum(beta) + 1) <= sum(d),
/// or if no entry is left unsaturated.
WeakComposition psi_injection(const WeakComposition &beta,
                              const OneRowSpec &spec);

/// The tableau with first-row content beta whose second row records where
/// the dots landed; empty when some entry is unsatisfied.
std::optional<TwoRowTableau> tableau_from_first_row(const WeakComposition &beta,
                                                    const OneRowSpec &spec);

/// Product over columns (a, b) of (x_a - x_b), on the 1-by-n grid.
Poly f_T_poly(const TwoRowTableau &t, int n);

/// x^{content of the second row}.
Monomial second_row_monomial(const TwoRowTableau &t, int n);

/// Compositions c <= d componentwise with sum m.
std::vector<WeakComposition> bounded_compositions(const WeakComposition &d,
                                                  int m);

} // namespace ctq
