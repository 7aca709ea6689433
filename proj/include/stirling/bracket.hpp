#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace stirling {

enum class Method {
  Exact,         // S = 1 for m in {1, n}
  ExactNm1,      // n - m = 1
  ExactNm2,      // n - m = 2
  Thm33,         // moment expansion bracket, m close to n
  Thm34,         // geometric-sum Chebyshev bracket, m small
  Thm45,         // tilted lattice local bound, central region
  Expansion,     // full binomial re-expansion of the moment route
  TrivialUpper,  // 1 <= S <= m^n/m!
};

std::string_view to_string(Method method);

/// Certified two-sided bracket held in log space. lower_log may be -inf.
struct BoundBracket {
  long double lower_log = -std::numeric_limits<long double>::infinity();
  long double upper_log = std::numeric_limits<long double>::infinity();
  Method method = Method::TrivialUpper;
  bool preconditions_ok = false;
  std::string report;

  /// upper_log - lower_log; infinite when either endpoint is.
  long double width() const;
  bool lower_finite() const;
  /// Whether log_value lies inside [lower_log, upper_log].
  bool contains_log(long double log_value) const;
};

/// Precedence used to break width ties, lower is preferred.
int precedence(Method method);

}  // namespace stirling
