#pragma once

#include "ctq/numeric.hpp"
#include "ctq/partition.hpp"
#include "ctq/symfunc.hpp"

#include <map>
#include <vector>

namespace ctq {

/// chi^lambda at the class of cycle type rho (Murnaghan-Nakayama).
/// Throws std::invalid_argument if the sizes differ.
BigInt mn_character(const Partition &lambda, const Partition &rho);

/// Order of the centralizer of a permutation of cycle type rho.
BigInt centralizer_size(const Partition &rho);

/// Conjugacy class of S_{n_1} x ... x S_{n_r}: one cycle type per factor.
using ProductClass = std::vector<Partition>;
std::vector<ProductClass> product_classes(const std::vector<int> &degrees);

/// Character of the module with Frobenius image f (Schur basis) at a class.
BigInt character_value(const TensorSymFunc &f, const ProductClass &c);

/// Class function given by its values on product_classes(degrees),
/// decomposed into irreducibles with exact rational inner products. Throws
/// std::runtime_error if a multiplicity is not a nonnegative integer.
TensorSymFunc decompose_class_function(const std::vector<int> &degrees,
                                       const std::map<ProductClass, BigInt> &chi);

/// Internal tensor product (diagonal action) of two modules of one group.
TensorSymFunc kronecker_product(const TensorSymFunc &a, const TensorSymFunc &b);

/// True when every irreducible occurs in a (x) a at least as often as in b.
/// Throws std::invalid_argument if the groups differ.
bool kronecker_dominance(const TensorSymFunc &a, const TensorSymFunc &b);

} // namespace ctq
