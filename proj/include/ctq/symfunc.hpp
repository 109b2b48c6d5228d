#pragma once

#include "ctq/matrix.hpp"
#include "ctq/numeric.hpp"
#include "ctq/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace ctq {

enum class SymBasis { H, S };

/// Homogeneous symmetric function of degree n in the h or s basis.
struct SymFunc {
  SymBasis basis = SymBasis::S;
  int degree = 0;
  std::map<Partition, BigInt> terms;

  void add(const Partition &lambda, const BigInt &c);
  bool operator==(const SymFunc &) const = default;
};

/// Element of Lambda_{n_1} (x) ... (x) Lambda_{n_r} in a product basis.
struct TensorSymFunc {
  SymBasis basis = SymBasis::S;
  std::vector<int> factor_degrees;
  std::map<std::vector<Partition>, BigInt> terms;

  void add(const std::vector<Partition> &key, const BigInt &c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorSymFunc &) const = default;
  TensorSymFunc &operator+=(const TensorSymFunc &o);
};

/// Concatenated tensor factors: a (x) b.
TensorSymFunc outer(const TensorSymFunc &a, const TensorSymFunc &b);

/// K(rho, lambda) = K_{rho,lambda}, indexed by enum_partitions(n), so
/// column lambda is the Schur expansion of h_lambda. Upper unitriangular.
struct KostkaMatrix {
  std::vector<Partition> index;
  Matrix<BigInt> k;

  int position(const Partition &p) const;
};
KostkaMatrix kostka_matrix(int n);
/// Inverse of kostka_matrix(n), same indexing.
KostkaMatrix inv_kostka(int n);

SymFunc h_to_s(const SymFunc &f);
SymFunc s_to_h(const SymFunc &f);
TensorSymFunc h_to_s(const TensorSymFunc &f);

/// Dimension of the module with this Frobenius image, taking
/// s_lambda to f^lambda and h_lambda to n! / prod lambda_i!.
BigInt dimension(const SymFunc &f);
BigInt dimension(const TensorSymFunc &f);

std::string to_string(const SymFunc &f);
std::string to_string(const TensorSymFunc &f);

} // namespace ctq
