#pragma once

#include "stirling/bracket.hpp"
#include "stirling/index.hpp"

// Central region. W_m(q) = X(q_1) + ... + X(q_m) with q_j = q j / m; the tilt
// q solves E W_m(q) = n - m, which centers the lattice walk at the target
// point. Then
//   S(n,m) = m^n q^{-(n-m)} / prod_j (m - q j) * P(W_m(q) = n - m)
// and the lattice probability is close to 1 / (sigma_m sqrt(2 pi)).

namespace stirling {

struct TiltedParams {
  unsigned n = 0;
  unsigned m = 0;
  long double q = 0;
  long double p = 0;
  long double sigma_sq_m = 0;        // Var W_m(q)
  long double sigma_sq_m_minus = 0;  // Var W_{m-1}(q), the first m-1 summands
  /// log of m^n q^{-(n-m)} / prod_j (m - q j).
  long double log_prefactor = 0;
  /// |E W_m(q) - (n - m)| at the accepted q.
  long double residual = 0;
};

/// E W_m(q) = sum_{j=1..m} (q j/m) / (1 - q j/m), strictly increasing in q.
long double expected_w(long double q, unsigned m);

/// Var W_{m-1}(q) = sum_{j=1..m-1} (q j/m) / (1 - q j/m)^2.
long double variance_w_minus(long double q, unsigned m);

/// log of m^n q^{-(n-m)} / prod_{j=1..m} (m - q j), valid for any 0 < q < 1.
long double tilt_log_prefactor(long double q, const Index& idx);

/// Solves the tilt equation by bisection. Requires n > m.
TiltedParams solve_tilt(const Index& idx);

/// Two-sided local bound
///   |P(W_m(q) = n-m) - 1/(sigma_m sqrt(2 pi))|
///     <= (2 + 9 sqrt(2 pi)) / (2 pi p sigma_m^2) + 6 sqrt(2) / (pi p sigma_{m-1} sigma_m),
/// scaled by the prefactor. Requires m >= 2 and n > m.
BoundBracket thm45_bracket(const Index& idx);

/// Relative half-width of the central bracket: error term times sigma_m sqrt(2 pi).
long double thm45_relative_half_width(const TiltedParams& t);

struct TiltSandwich {
  long double n_over_m_low = 0;
  long double n_over_m_high = 0;
  long double sigma_minus_low = 0;
  long double sigma_minus_high = 0;
};

/// Integral-comparison bounds on n/m and on sigma_{m-1}^2 at tilt q.
/// Requires 0 < q < 1 and m >= 2.
TiltSandwich lemma59_sandwich(long double q, unsigned m);

/// |E exp(i theta (W_m(q) - E W_m(q)))| = prod_j (1 + 2 (1 - cos theta) q_j / p_j^2)^{-1/2}.
long double charfn_modulus(long double q, unsigned m, long double theta);

}  // namespace stirling
