#pragma once

#include "stirling/big.hpp"
#include "stirling/bracket.hpp"
#include "stirling/config.hpp"
#include "stirling/index.hpp"

// Brackets for S(n, m) when m is close to n or small compared to n.

namespace stirling {

/// Rounded-up value of e^{1/4}.
inline constexpr long double kExpQuarterUp = 1.2840254166877415L;

/// Bracket nu^d/d! * [C - R, C + R], d = n - m, with
/// C = 1 + C(d,2) tau^2/nu^2 and R = 2 e^{1/4} (2 d tau/nu)^3.
/// Requires 3 <= d and 2 d tau_m <= nu_m.
BoundBracket thm33_bracket(const Index& idx);

/// Center C of the moment-expansion bracket, exact.
Rational thm33_center(const Index& idx);

/// Relative radius R / C of the moment-expansion bracket (before slack).
long double thm33_relative_radius(const Index& idx);

/// S(n, n-1) = nu_{n-1} and S(n, n-2) = (nu_{n-2}^2 + tau_{n-2}^2) / 2.
BigInt exact_near_diagonal(const Index& idx);

/// S(n,m) d!/nu^d = sum_{j=0..d} C(d,j) mu_j / nu^j with mu_j the central
/// moments of S_m.
Rational expansion_ratio(const Index& idx, unsigned order_cap = config::kMomentOrderCap);

BigInt expansion_exact(const Index& idx, unsigned order_cap = config::kMomentOrderCap);

/// Exact endpoints of the small-m bracket. The upper endpoint m^n/m! is
/// valid for every index; the lower endpoint
/// (m^n/m!) (1 - (m^2 H_{m,2} - m H_m) / (n - m H_m + 1)^2) requires m >= 2 and
/// n >= m H_m and is clamped at zero.
struct Thm34Endpoints {
  Rational lower;
  Rational upper;
  bool lower_valid = false;
  /// Relative gap 1 - lower/upper before clamping.
  Rational remainder;
};

Thm34Endpoints thm34_endpoints(const Index& idx);

BoundBracket thm34_bracket(const Index& idx);

BoundBracket trivial_upper(const Index& idx);

}  // namespace stirling
