#include "stirling/central.hpp"

#include <cmath>
#include <sstream>

#include "stirling/config.hpp"
#include "stirling/errors.hpp"

namespace stirling {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

// Directed enclosures of the constants in the central bound.
constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kSqrt2Pi = 2.506628274631000502415765284811045253L;
constexpr long double kSqrt2 = 1.414213562373095048801688724209698079L;

const long double kPiDown = std::nextafter(kPi, 0.0L);
const long double kSqrt2PiUp = std::nextafter(kSqrt2Pi, kInf);
const long double kSqrt2PiDown = std::nextafter(kSqrt2Pi, 0.0L);
const long double kSqrt2Up = std::nextafter(kSqrt2, kInf);

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + c_; }

 private:
  long double sum_ = 0;
  long double c_ = 0;
};

}  // namespace

long double expected_w(long double q, unsigned m) {
  const long double mm = m;
  long double sum = 0;
  for (unsigned j = 1; j < m; ++j) {
    const long double qj = q * j;
    sum += qj / (mm - qj);
  }
  // j = m term q/(1-q), with 1-q exact for q >= 1/2.
  return sum + q / (1.0L - q);
}

long double variance_w_minus(long double q, unsigned m) {
  const long double mm = m;
  long double sum = 0;
  for (unsigned j = 1; j < m; ++j) {
    const long double qj = q * j;
    const long double rest = mm - qj;
    sum += qj * mm / (rest * rest);
  }
  return sum;
}

long double tilt_log_prefactor(long double q, const Index& idx) {
  const unsigned m = idx.m();
  CompensatedSum log_sum;
  for (unsigned j = 1; j <= m; ++j) {
    log_sum.add(std::log(static_cast<long double>(m) - q * j));
  }
  return idx.n() * std::log(static_cast<long double>(m)) - static_cast<long double>(idx.displacement()) * std::log(q) -
         log_sum.value();
}

TiltedParams solve_tilt(const Index& idx) {
  if (idx.n() == idx.m()) {
    throw InvalidIndex("solve_tilt requires n > m, got " + idx.str());
  }
  const unsigned m = idx.m();
  const long double target = idx.displacement();
  const long double tol = config::kTiltTolerance * std::max(1.0L, target);

  long double eps = 0.25L;
  while (expected_w(eps, m) > target || expected_w(1.0L - eps, m) < target) {
    eps /= 2;
    if (eps < 0x1p-62L) {
      throw NoConvergence("solve_tilt: cannot bracket the tilt for " + idx.str());
    }
  }
  long double lo = eps;
  long double hi = 1.0L - eps;
  long double q = 0;
  long double residual = kInf;
  for (int step = 0; step < config::kMaxBisectionSteps; ++step) {
    const long double mid = lo + (hi - lo) / 2;
    const long double value = expected_w(mid, m);
    if (std::fabs(value - target) < residual) {
      residual = std::fabs(value - target);
      q = mid;
    }
    if (residual <= tol || mid == lo || mid == hi) {
      break;
    }
    (value < target ? lo : hi) = mid;
  }
  if (residual > tol) {
    throw NoConvergence("solve_tilt: bisection stalled at residual " + std::to_string(static_cast<double>(residual)) +
                        " for " + idx.str());
  }

  TiltedParams t;
  t.n = idx.n();
  t.m = m;
  t.q = q;
  t.p = 1.0L - q;
  t.sigma_sq_m_minus = variance_w_minus(q, m);
  t.sigma_sq_m = t.sigma_sq_m_minus + q / (t.p * t.p);
  t.residual = residual;

  t.log_prefactor = tilt_log_prefactor(q, idx);
  return t;
}

namespace {

long double thm45_error(const TiltedParams& t) {
  const long double sigma = std::sqrt(t.sigma_sq_m);
  const long double sigma_minus = std::sqrt(t.sigma_sq_m_minus);
  return (2.0L + 9.0L * kSqrt2PiUp) / (2.0L * kPiDown * t.p * t.sigma_sq_m) +
         6.0L * kSqrt2Up / (kPiDown * t.p * sigma_minus * sigma);
}

}  // namespace

long double thm45_relative_half_width(const TiltedParams& t) {
  return thm45_error(t) * std::sqrt(t.sigma_sq_m) * kSqrt2Pi;
}

BoundBracket thm45_bracket(const Index& idx) {
  BoundBracket b;
  b.method = Method::Thm45;
  if (idx.m() < 2 || idx.n() == idx.m()) {
    b.report = "requires m >= 2 and n > m";
    return b;
  }
  const TiltedParams t = solve_tilt(idx);
  const long double sigma = std::sqrt(t.sigma_sq_m);
  const long double main_low = 1.0L / (sigma * kSqrt2PiUp);
  const long double main_high = 1.0L / (sigma * kSqrt2PiDown);
  const long double error = thm45_error(t);

  const long double lower = (main_low - error) * (1.0L - config::kRelativeSlack);
  const long double upper = (main_high + error) * (1.0L + config::kRelativeSlack);
  b.lower_log = lower > 0 ? t.log_prefactor + std::log(lower) : -kInf;
  b.upper_log = t.log_prefactor + std::log(upper);
  b.preconditions_ok = true;

  std::ostringstream report;
  report << "tilt q = " << static_cast<double>(t.q) << ", sigma_m^2 = " << static_cast<double>(t.sigma_sq_m)
         << ", main term " << static_cast<double>(main_low) << ", error " << static_cast<double>(error);
  if (lower <= 0) {
    report << "; error exceeds main term, lower bound vacuous";
  }
  b.report = report.str();
  return b;
}

TiltSandwich lemma59_sandwich(long double q, unsigned m) {
  const long double mm = m;
  const long double p = 1.0L - q;
  TiltSandwich s;
  s.n_over_m_low = 1.0L / (mm * p) - std::log1p(-q * (mm - 1.0L) / mm) / q;
  s.n_over_m_high = 1.0L / (mm * p) - std::log1p(-q) / q;
  s.sigma_minus_low = mm * (mm - 1.0L) / (mm * p + q) + (mm / q) * std::log(((mm - 1.0L) * p + 1.0L) / mm);
  s.sigma_minus_high = mm / p + (mm / q) * std::log(mm * p / (mm - q));
  return s;
}

long double charfn_modulus(long double q, unsigned m, long double theta) {
  const long double half_sin = std::sin(theta / 2);
  const long double one_minus_cos = 2.0L * half_sin * half_sin;
  long double log_product = 0;
  for (unsigned j = 1; j <= m; ++j) {
    const long double qj = q * j / m;
    const long double pj = 1.0L - qj;
    log_product += std::log1p(2.0L * one_minus_cos * qj / (pj * pj));
  }
  return std::exp(-0.5L * log_product);
}

}  // namespace stirling
