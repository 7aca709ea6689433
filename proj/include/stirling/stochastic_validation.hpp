#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include "stirling/central.hpp"
#include "stirling/index.hpp"
#include "stirling/random_stream.hpp"

// Stochastic and quadrature checks of the three representations of S(n,m):
// moments of S_m, the lattice probability of the tilted walk W_m(q), and
// the distribution function of the geometric sum V_{m-1}.

namespace stirling {

/// Geometric draw with failure probability q, P(k) = (1-q) q^k, by inversion.
std::uint64_t sample_geometric(double q, RandomStream& rng);

/// Unit-rate exponential draw.
double sample_exponential(RandomStream& rng);

enum class McTarget { ProbRepresentation, MomentRepresentation };

std::string_view to_string(McTarget target);

struct MCReport {
  McTarget target = McTarget::ProbRepresentation;
  double estimate = 0;
  double std_error = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  /// Exact value of the estimated quantity.
  long double reference = 0;

  /// (estimate - reference) / std_error; zero when both agree exactly.
  double z_score() const;
};

/// Estimates P(V_{m-1} <= n-m). Requires m >= 2.
MCReport mc_probability_representation(const Index& idx, std::uint64_t n_samples, std::uint64_t seed);

/// Estimates E S_m^{n-m} / (n-m)! = S(n,m). Requires n - m <= 8.
MCReport mc_moment_representation(const Index& idx, std::uint64_t n_samples, std::uint64_t seed);

/// E exp(i theta W_m(q)) = prod_j p_j / (1 - q_j e^{i theta}).
std::complex<double> tilted_walk_charfn(double q, unsigned m, double theta);

struct FourierInversion {
  TiltedParams tilt;
  /// (1/2pi) * integral over [-pi, pi] of the real part, i.e. P(W_m(q) = n-m).
  double lattice_probability = 0;
  /// Same for the imaginary part; zero up to quadrature error.
  double imaginary_part = 0;
  double error_estimate = 0;
  long double log_prefactor = 0;
  /// prefactor * lattice_probability, an estimate of S(n,m).
  long double stirling_estimate = 0;
};

/// Numerical inversion of the tilted walk's characteristic function at
/// n - m. Requires m >= 2 and n > m. Throws NoConvergence when the adaptive
/// quadrature cannot reach its tolerance within the depth cap.
FourierInversion quadrature_fourier(const Index& idx);

}  // namespace stirling
