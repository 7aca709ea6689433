#pragma once

#include <optional>
#include <string_view>

#include "stirling/big.hpp"
#include "stirling/index.hpp"

// Classical reference estimators for S(n,m), used to put the certified
// brackets in context. Only the Rennie-Dobson bracket is certified.

namespace stirling {

enum class ComparatorMethod { JordanSmallM, JordanLargeM, RennieDobson, MoserWyman };

std::string_view to_string(ComparatorMethod method);

struct ComparatorValue {
  ComparatorMethod method = ComparatorMethod::JordanSmallM;
  /// Point estimate in log space; for brackets the geometric midpoint.
  long double value_log = 0;
  std::optional<long double> lower_log;
  std::optional<long double> upper_log;
  bool certified = false;
};

struct JordanEstimates {
  ComparatorValue small_m;  // m^n / m!
  ComparatorValue large_m;  // n^{2d} / (2^d d!) with d = n - m
};

JordanEstimates jordan_estimates(const Index& idx);

struct RennieDobsonEndpoints {
  Rational lower;  // (m^2 + m + 2) m^{n-m-1} / 2 - 1
  Rational upper;  // C(n,m) m^{n-m} / 2
};

/// Requires m <= n - 1.
RennieDobsonEndpoints rennie_dobson_endpoints(const Index& idx);
ComparatorValue rennie_dobson_bracket(const Index& idx);

/// Root of R / (1 - e^{-R}) = ratio for ratio > 1, by bisection.
long double moser_wyman_r(long double ratio);

/// n! (e^R - 1)^m / (2 R^n m! sqrt(pi m R H)), H = e^R (e^R - 1 - R) / (2 (e^R - 1)^2).
/// Requires m < n. Point estimate only.
ComparatorValue moser_wyman_leading(const Index& idx);

/// log n!, from the exact factorial up to n = 10^4 and lgamma beyond.
long double log_factorial(unsigned n);

}  // namespace stirling
