#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/big.hpp"
#include "stirling/bracket.hpp"
#include "stirling/index.hpp"

namespace stirling {

enum class Regime {
  ExactTrivial,   // m in {1, n}
  NearDiagonal,   // n - m in {1, 2}
  Case1HighM,     // 3 <= n - m <= nu_m / (2 tau_m)
  Case2SmallM,    // n >= m H_m + m
  Case3Central,   // everything else
  Case4Boundary,  // |n - m - m log m| <= m
};

std::string_view to_string(Regime regime);

/// Concrete finite-n proxy for the asymptotic regimes. Advisory only: the
/// selector below picks by bracket width regardless of the label.
Regime classify(const Index& idx);

/// Human-readable account of which threshold fired.
std::string classification_rationale(const Index& idx);

struct DispatchReport {
  Index index;
  Regime label;
  std::string rationale;
  std::vector<BoundBracket> brackets;
  BoundBracket chosen;
  std::optional<BigInt> exact;
};

/// Thrown when verification finds the exact value outside a certified bracket.
class ContainmentViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Evaluates every applicable estimator and returns the narrowest certified
/// bracket. Exact paths (m in {1, n}, n - m <= 2) give width zero. When
/// verify is set, the exact value is computed and every certified candidate
/// is checked against it.
DispatchReport best_bracket(const Index& idx, bool verify = false);

}  // namespace stirling
