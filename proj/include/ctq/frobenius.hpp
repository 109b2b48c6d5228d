#pragma once

#include "ctq/characters.hpp"
#include "ctq/numeric.hpp"
#include "ctq/partition.hpp"
#include "ctq/symfunc.hpp"

#include <vector>

namespace ctq {

/// Unordered multiset partition. Each block is a count vector over the
/// letters 1..r; blocks are stored largest first, equal sizes in
/// decreasing lexicographic order of their counts.
struct MultisetPartition {
  std::vector<std::vector<int>> blocks;
};

/// Multiset partitions of {1^{counts_1}, 2^{counts_2}, ...} whose block
/// sizes are the parts of shape.
std::vector<MultisetPartition>
enum_multiset_partitions(const std::vector<int> &counts, const Partition &shape);

/// psi_mu(h_lambda) in the h basis, with one tensor factor per distinct
/// part of mu in multiplicity_profile order. Throws std::invalid_argument
/// if the sizes differ.
TensorSymFunc psi_h(const Partition &mu, const Partition &lambda);
/// psi_mu(s_lambda) in the Schur basis.
TensorSymFunc psi_s(const Partition &mu, const Partition &lambda);

/// Graded Frobenius image of the quotient for Stab(mu) x Stab(nu).
struct GradedDecomp {
  Partition mu;
  Partition nu;
  std::vector<int> factor_degrees;
  /// degrees[d] is the degree-d component.
  std::vector<TensorSymFunc> degrees;

  QPoly dimensions() const;
  /// Character of the whole module at a class of the product group.
  BigInt character(const ProductClass &c) const;
};
GradedDecomp graded_frobenius(const Partition &mu, const Partition &nu);

/// Tables with margins mu, nu fixed by permuting rows with a permutation
/// of class c_mu in Stab(mu) and columns with one of class c_nu.
BigInt fixed_tables(const Partition &mu, const Partition &nu,
                    const ProductClass &c_mu, const ProductClass &c_nu);

/// Degrees k where V_k (x) V_k fails to contain V_{k-1} (x) V_{k+1}.
std::vector<int> equivariant_log_concavity_violations(const GradedDecomp &g);

/// sum_lambda K_{lambda,alpha} K_{lambda,beta} q^{n - lambda_1}, keeping
/// only degrees <= max_degree when it is nonnegative.
QPoly hilbert_kostka(const WeakComposition &alpha, const WeakComposition &beta,
                     int max_degree = -1);

/// Indices k with a_k^2 < a_{k-1} a_{k+1} between the first and last
/// nonzero coefficients.
std::vector<int> log_concavity_report(const QPoly &coeffs);

/// Entries m = 0..order. The closed series uses margins m*alpha, m*beta.
/// The interior series uses m*alpha - p and m*beta - k (k, p the lengths)
/// and is zero when a shifted part is negative; it needs positive parts.
std::vector<QPoly> q_ehrhart(const WeakComposition &alpha,
                             const WeakComposition &beta, int order,
                             bool interior);

} // namespace ctq
