#pragma once

#include "ctq/partition.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ctq {

struct JobSpec {
  std::string command;
  WeakComposition alpha;
  WeakComposition beta;
  /// Matrix in text or JSON form, for rsk and zigzag.
  std::string matrix;
  std::string method = "kostka";
  std::string tie = "row";
  int order = 3;
  int upto = 3;
  int family = 1;
  int n = 60;
  int max_n = 4;
  int max_len = 2;
  int threads = 1;
  bool interior = false;
  bool csv = false;
  bool full = false;
};

struct RunResult {
  /// 0 success, 1 a theorem-level check failed, 2 usage error.
  int status = 0;
  std::string output;
  std::string error;
};

/// Executes a parsed job. Usage problems (mismatched sums, bad matrices)
/// come back as status 2.
RunResult run(const JobSpec &job);

/// Parses the command line and runs it. The matrix file "-" reads `in`.
RunResult run_command_line(const std::vector<std::string> &args,
                           std::istream &in);

struct SweepOptions {
  int max_n = 4;
  int max_len = 2;
  int threads = 1;
  /// Frobenius and equivariant checks cover partitions up to this size.
  int max_frobenius_n = 6;
};

/// Theorem and conjecture checks over every pair of weak compositions with
/// sum at most max_n and lengths 1..max_len. "passed" is false only when a
/// theorem-level check fails; conjecture violations are listed as data.
nlohmann::json sweep(const SweepOptions &options);

/// Loads and saves the Kostka memo under $CTQ_CACHE_DIR when set.
void load_kostka_cache();
void save_kostka_cache();

} // namespace ctq
