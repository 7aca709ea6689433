#pragma once

#include <cstdint>
#include <string_view>

namespace stirling::config {

/// Largest n - m handled by the moment-based routes (cumulant recursion is
/// quadratic in the order with growing integers).
inline constexpr unsigned kMomentOrderCap = 400;

/// Largest n for which the CLI computes exact reference values. Overridden by
/// the STIRLING_EXACT_CAP environment variable.
inline constexpr unsigned kExactCap = 400;

/// Relative widening applied to every floating-point bracket endpoint.
inline constexpr long double kRelativeSlack = 1e-9L;

/// Tilt equation is solved to |E W_m(q) - (n - m)| <= kTiltTolerance * max(1, n - m).
inline constexpr long double kTiltTolerance = 1e-12L;
inline constexpr int kMaxBisectionSteps = 200;

/// Highest power n - m accepted by the Monte-Carlo moment estimator.
inline constexpr unsigned kMonteCarloPowerCap = 8;

/// Fourier inversion quadrature.
inline constexpr double kQuadratureAbsTolerance = 1e-10;
inline constexpr unsigned kQuadratureMaxDepth = 20;

/// Random streams are Philox4x32 with 10 rounds.
inline constexpr std::string_view kRngName = "philox4x32-10";

/// Exact cap honoring STIRLING_EXACT_CAP when it parses as a positive integer.
unsigned exact_cap_from_env();

}  // namespace stirling::config
