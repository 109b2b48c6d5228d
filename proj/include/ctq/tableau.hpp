#pragma once

#include "ctq/numeric.hpp"
#include "ctq/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctq {

/// Semistandard Young tableau stored row by row. Entries start at 1.
class Tableau {
public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>> &rows() const { return rows_; }
  Partition shape() const;
  /// Number of entries equal to v for v = 1..length.
  WeakComposition content(std::size_t length) const;
  bool is_semistandard() const;

  auto operator<=>(const Tableau &) const = default;

private:
  std::vector<std::vector<int>> rows_;
};

/// Partitions mu with lambda/mu a horizontal strip of the given size.
std::vector<Partition> remove_horizontal_strips(const Partition &lambda,
                                                int size);
/// Partitions lambda with lambda/mu a horizontal strip of the given size,
/// restricted to at most max_rows rows when max_rows is nonnegative.
std::vector<Partition> add_horizontal_strips(const Partition &mu, int size,
                                             int max_rows = -1);

/// All SSYT of shape lambda and content alpha, in a fixed order.
std::vector<Tableau> enum_ssyt(const Partition &lambda,
                               const WeakComposition &alpha);

/// Memo for Kostka numbers. K(lambda, alpha) is found by peeling off a
/// horizontal strip of size alpha_last and recursing on the shorter
/// content, so entries are shared by all contents with a common prefix.
/// Not internally synchronized.
class KostkaTable {
public:
  BigInt operator()(const Partition &lambda, const WeakComposition &alpha);

  std::size_t size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

  /// Versioned JSON form of the memo.
  std::string to_json() const;
  /// Merges entries from to_json output. Throws on a version mismatch.
  void merge_json(const std::string &text);

private:
  BigInt count(const Partition &lambda, const std::vector<int> &alpha,
               std::size_t len);
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

/// K_{lambda,alpha} using a per-thread KostkaTable.
BigInt kostka(const Partition &lambda, const WeakComposition &alpha);
KostkaTable &thread_kostka_table();

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt f_lambda(const Partition &lambda);

} // namespace ctq
