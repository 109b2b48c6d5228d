#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ctq {

/// Finite sequence of nonnegative integers. Zero parts are allowed.
class WeakComposition {
public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);
  WeakComposition(std::initializer_list<int> parts)
      : WeakComposition(std::vector<int>(parts)) {}

  const std::vector<int> &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int sum() const { return sum_; }
  bool has_zero() const;

  auto operator<=>(const WeakComposition &) const = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int> &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Dominance order on partitions of the same size.
  bool dominates(const Partition &other) const;

  auto operator<=>(const Partition &) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const WeakComposition &a);
std::string to_string(const Partition &a);

/// Partitions of n in reverse lexicographic order, (n) first. Parts are
/// bounded by max_part when it is nonnegative.
std::vector<Partition> enum_partitions(int n, int max_part = -1);
/// Partitions of n whose first part is at least min_first.
std::vector<Partition> enum_partitions_with_first_at_least(int n,
                                                           int min_first);

/// Weak compositions of n with the given length, in lexicographic order.
std::vector<WeakComposition> enum_weak_compositions(int n, int length);
/// Compositions of n (positive parts) of every length.
std::vector<WeakComposition> enum_compositions(int n);

/// Multiplicities of the distinct parts of mu, listed weakly decreasing.
/// Ties are broken by larger part first. The i-th entry pairs with
/// distinct_parts_by_multiplicity(mu)[i].
std::vector<int> multiplicity_profile(const Partition &mu);
std::vector<int> distinct_parts_by_multiplicity(const Partition &mu);

/// Parses "3,2,1" or shorthand such as "2^30" or "3^2,1".
WeakComposition parse_composition(const std::string &text);

struct PartitionHash {
  std::size_t operator()(const Partition &p) const;
};
struct CompositionHash {
  std::size_t operator()(const WeakComposition &c) const;
};

} // namespace ctq
