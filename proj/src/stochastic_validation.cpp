#include "stirling/stochastic_validation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stirling/config.hpp"
#include "stirling/errors.hpp"
#include "stirling/exact_oracles.hpp"

namespace stirling {

std::uint64_t sample_geometric(double q, RandomStream& rng) {
  const double u = rng.uniform_open();
  const double k = std::floor(std::log(u) / std::log(q));
  if (k >= 0x1p63) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(k);
}

double sample_exponential(RandomStream& rng) { return -std::log(rng.uniform_open()); }

std::string_view to_string(McTarget target) {
  return target == McTarget::ProbRepresentation ? "PROB_REPRESENTATION" : "MOMENT_REPRESENTATION";
}

double MCReport::z_score() const {
  const double diff = estimate - static_cast<double>(reference);
  if (std_error == 0) {
    return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
  return diff / std_error;
}

MCReport mc_probability_representation(const Index& idx, std::uint64_t n_samples, std::uint64_t seed) {
  if (idx.m() < 2) {
    throw InvalidIndex("probability representation requires m >= 2, got " + idx.str());
  }
  if (n_samples == 0) {
    throw std::invalid_argument("n_samples must be positive");
  }
  const unsigned m = idx.m();
  const std::uint64_t limit = idx.displacement();
  RandomStream rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    std::uint64_t total = 0;
    for (unsigned j = 1; j < m && total <= limit; ++j) {
      total += sample_geometric(static_cast<double>(j) / m, rng);
    }
    hits += total <= limit ? 1 : 0;
  }
  MCReport r;
  r.target = McTarget::ProbRepresentation;
  r.n_samples = n_samples;
  r.seed = seed;
  r.estimate = static_cast<double>(hits) / static_cast<double>(n_samples);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n_samples));
  r.reference = to_long_double(geometric_sum_cdf_exact(m, idx.displacement()).entries.back());
  return r;
}

MCReport mc_moment_representation(const Index& idx, std::uint64_t n_samples, std::uint64_t seed) {
  const unsigned d = idx.displacement();
  if (d > config::kMonteCarloPowerCap) {
    throw PowerTooLarge("moment representation is capped at n-m <= " + std::to_string(config::kMonteCarloPowerCap) +
                        ", got n-m = " + std::to_string(d));
  }
  if (n_samples == 0) {
    throw std::invalid_argument("n_samples must be positive");
  }
  const unsigned m = idx.m();
  const double d_factorial = std::tgamma(d + 1.0);
  RandomStream rng(seed);
  // Welford running mean and variance.
  double mean = 0;
  double m2 = 0;
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    double weighted = 0;
    for (unsigned j = 1; j <= m; ++j) {
      weighted += j * sample_exponential(rng);
    }
    const double x = std::pow(weighted, static_cast<double>(d)) / d_factorial;
    const double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  MCReport r;
  r.target = McTarget::MomentRepresentation;
  r.n_samples = n_samples;
  r.seed = seed;
  r.estimate = mean;
  r.std_error = n_samples > 1 ? std::sqrt(m2 / static_cast<double>(n_samples - 1) / static_cast<double>(n_samples)) : 0.0;
  r.reference = to_long_double(stirling_exact(idx));
  return r;
}

std::complex<double> tilted_walk_charfn(double q, unsigned m, double theta) {
  const std::complex<double> phase = std::polar(1.0, theta);
  std::complex<double> product = 1.0;
  for (unsigned j = 1; j <= m; ++j) {
    const double qj = q * j / m;
    product *= (1.0 - qj) / (1.0 - qj * phase);
  }
  return product;
}

FourierInversion quadrature_fourier(const Index& idx) {
  if (idx.m() < 2 || idx.n() == idx.m()) {
    throw InvalidIndex("quadrature_fourier requires m >= 2 and n > m, got " + idx.str());
  }
  FourierInversion out;
  out.tilt = solve_tilt(idx);
  const double q = static_cast<double>(out.tilt.q);
  const unsigned m = idx.m();
  const double d = idx.displacement();
  const auto integrand = [&](double theta) {
    return tilted_walk_charfn(q, m, theta) * std::polar(1.0, -theta * d);
  };

  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr double pi = std::numbers::pi;
  // Relative tolerance against the L1 norm, which is at most 2 pi.
  const double tol = config::kQuadratureAbsTolerance / (2 * pi);
  double err_re = 0;
  double err_im = 0;
  const double re = Quadrature::integrate([&](double t) { return integrand(t).real(); }, -pi, pi,
                                          config::kQuadratureMaxDepth, tol, &err_re);
  const double im = Quadrature::integrate([&](double t) { return integrand(t).imag(); }, -pi, pi,
                                          config::kQuadratureMaxDepth, tol, &err_im);
  out.error_estimate = std::max(err_re, err_im);
  if (out.error_estimate > config::kQuadratureAbsTolerance) {
    throw NoConvergence("quadrature did not reach tolerance for " + idx.str());
  }
  out.lattice_probability = re / (2 * pi);
  out.imaginary_part = im / (2 * pi);
  out.log_prefactor = tilt_log_prefactor(static_cast<long double>(q), idx);
  out.stirling_estimate = std::exp(out.log_prefactor) * static_cast<long double>(out.lattice_probability);
  return out;
}

}  // namespace stirling
