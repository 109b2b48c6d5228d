#pragma once

#include "ctq/matrix.hpp"
#include "ctq/poly.hpp"

namespace ctq {

/// f acting on g as a differential operator: each x_ij in f becomes
/// d/dx_ij.
Poly apply_diff(const Poly &f, const Poly &g);

/// Row polarization: sum_j x_{to,j} d f / d x_{from,j}. Rows are 0-based.
Poly polarize_row(const Poly &f, int from, int to);
/// Column polarization: sum_i x_{i,to} d f / d x_{i,from}.
Poly polarize_col(const Poly &f, int from, int to);

/// Moves m units from row `from` to row `to`, taking them from the
/// leftmost possible columns of row `from` (the lexicographically largest
/// choice). Throws std::invalid_argument if m exceeds the row sum.
NonnegMatrix shift_row(const NonnegMatrix &a, int from, int to, int m);
/// Same with columns, taking units from the topmost rows.
NonnegMatrix shift_col(const NonnegMatrix &a, int from, int to, int m);

/// s-step leftward split of magnitude m: moves c_j from position j to j-s
/// with c lexicographically largest, 0 <= c_j <= d_j and sum c = m. Needs
/// at least s leading zeros.
WeakComposition split_left(const WeakComposition &d, int s, int m);

/// Adds the first nonzero row of a zigzag matrix to its second nonzero row
/// and clears the first. Throws unless a is a zigzag with at least two
/// nonzero rows.
NonnegMatrix merge_row(const NonnegMatrix &a);

} // namespace ctq
