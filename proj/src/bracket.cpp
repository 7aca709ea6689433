#include "stirling/bracket.hpp"

#include <cmath>

namespace stirling {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Exact: return "EXACT";
    case Method::ExactNm1: return "EXACT_NM1";
    case Method::ExactNm2: return "EXACT_NM2";
    case Method::Thm33: return "THM33";
    case Method::Thm34: return "THM34";
    case Method::Thm45: return "THM45";
    case Method::Expansion: return "EXPANSION";
    case Method::TrivialUpper: return "TRIVIAL_UPPER";
  }
  return "UNKNOWN";
}

long double BoundBracket::width() const {
  if (!std::isfinite(lower_log) || !std::isfinite(upper_log)) {
    return std::numeric_limits<long double>::infinity();
  }
  return upper_log - lower_log;
}

bool BoundBracket::lower_finite() const { return std::isfinite(lower_log); }

bool BoundBracket::contains_log(long double log_value) const {
  return lower_log <= log_value && log_value <= upper_log;
}

int precedence(Method method) {
  switch (method) {
    case Method::Exact:
    case Method::ExactNm1:
    case Method::ExactNm2:
    case Method::Expansion: return 0;
    case Method::Thm33: return 1;
    case Method::Thm34: return 2;
    case Method::Thm45: return 3;
    case Method::TrivialUpper: return 4;
  }
  return 5;
}

}  // namespace stirling
