#pragma once

#include <span>
#include <vector>

#include "stirling/big.hpp"
#include "stirling/config.hpp"
#include "stirling/index.hpp"

// Three independent exact routes to S(n, m):
//   * the triangular recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1),
//   * the moment route (n-m)! S(n,m) = E S_m^{n-m},
//   * the probability route S(n,m) = m^n/m! P(V_{m-1} <= n-m), where
//     V_{m-1} = X(1/m) + ... + X((m-1)/m) is a sum of independent geometric
//     variables, X(q) having P(X = k) = (1-q) q^k.

namespace stirling {

/// S(n, m) by the recurrence, O(m) memory.
BigInt stirling_exact(const Index& idx);

/// Produces rows S(n, 0..n) for n = 0, 1, 2, ...
class StirlingRows {
 public:
  StirlingRows() : row_{1} {}

  /// Current row index n.
  unsigned n() const { return static_cast<unsigned>(row_.size() - 1); }
  const std::vector<BigInt>& row() const { return row_; }
  const BigInt& operator[](unsigned m) const { return row_.at(m); }

  void advance();

 private:
  std::vector<BigInt> row_;
};

BigInt stirling_via_moments(const Index& idx, unsigned order_cap = config::kMomentOrderCap);

struct RationalCdfTable {
  unsigned m = 0;
  unsigned k_max = 0;
  /// entries[k] = P(V_{m-1} <= k)
  std::vector<Rational> entries;
};

/// Truncated PMF P(X(q_1) + ... + X(q_r) = k), k = 0..k_max, for the given
/// failure probabilities, each in [0, 1).
std::vector<Rational> geometric_sum_pmf_exact(std::span<const Rational> failure_probs, unsigned k_max);

/// Requires m >= 2.
RationalCdfTable geometric_sum_cdf_exact(unsigned m, unsigned k_max);

/// Requires m >= 2.
BigInt stirling_via_probability(const Index& idx);

/// Checks sum_m S(n,m) (k)_m = k^n for every k = 0..n.
bool verify_defining_identity(unsigned n);

}  // namespace stirling
