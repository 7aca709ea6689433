#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "stirling/index.hpp"

namespace stirling::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitViolation = 3;

/// Runs the tool on args (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct MethodCounts {
  std::uint64_t applicable = 0;
  std::uint64_t contained = 0;
  std::uint64_t vacuous_lower = 0;

  friend bool operator==(const MethodCounts&, const MethodCounts&) = default;
};

struct Violation {
  unsigned n = 0;
  unsigned m = 0;
  std::string method;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct VerifySummary {
  unsigned n_max = 0;
  std::uint64_t points = 0;
  /// Keyed by method tag; ORACLE_* entries count exact-route agreements.
  std::map<std::string, MethodCounts> counts;
  /// Sorted by (n, m, method).
  std::vector<Violation> violations;

  friend bool operator==(const VerifySummary&, const VerifySummary&) = default;
};

/// Sweeps 1 <= m <= n <= n_max. Rows are distributed over `jobs` workers;
/// the summary does not depend on the job count.
VerifySummary verify_grid(unsigned n_max, unsigned jobs);

}  // namespace stirling::cli
