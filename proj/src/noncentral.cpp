#include "stirling/noncentral.hpp"

#include <cmath>
#include <sstream>

#include "stirling/errors.hpp"
#include "stirling/moments.hpp"

namespace stirling {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

long double widen_lower(long double log_value) {
  return std::isfinite(log_value) ? log_value + std::log1p(-config::kRelativeSlack) : log_value;
}

long double widen_upper(long double log_value) {
  return std::isfinite(log_value) ? log_value + std::log1p(config::kRelativeSlack) : log_value;
}

// log of a positive floating multiplier, -inf when it is not positive.
long double log_positive(long double x) { return x > 0 ? std::log(x) : -kInf; }

}  // namespace

Rational thm33_center(const Index& idx) {
  const unsigned d = idx.displacement();
  const ScalarParams s = scalar_params(idx.m());
  return Rational(1) + Rational(binomial(d, 2) * s.tau_sq, s.nu * s.nu);
}

namespace {

long double thm33_radius(unsigned d, const ScalarParams& s) {
  const long double tau_up = std::nextafter(std::sqrt(to_long_double(s.tau_sq)), kInf);
  const long double ratio = 2.0L * d * tau_up / to_long_double(s.nu);
  return 2.0L * kExpQuarterUp * ratio * ratio * ratio;
}

}  // namespace

long double thm33_relative_radius(const Index& idx) {
  const ScalarParams s = scalar_params(idx.m());
  return thm33_radius(idx.displacement(), s) / to_long_double(thm33_center(idx));
}

BoundBracket thm33_bracket(const Index& idx) {
  BoundBracket b;
  b.method = Method::Thm33;
  const unsigned d = idx.displacement();
  const ScalarParams s = scalar_params(idx.m());
  // 2 d tau <= nu  <=>  4 d^2 tau^2 <= nu^2, decided in integers.
  const bool small_enough = BigInt(4) * d * d * s.tau_sq <= s.nu * s.nu;
  std::ostringstream report;
  if (d < 3) {
    report << "requires n-m >= 3, got n-m = " << d;
    b.report = report.str();
    return b;
  }
  if (!small_enough) {
    report << "requires n-m <= nu_m/(2 tau_m): 4 (n-m)^2 tau_m^2 = " << BigInt(4) * d * d * s.tau_sq
           << " exceeds nu_m^2 = " << s.nu * s.nu;
    b.report = report.str();
    return b;
  }
  const Rational center = thm33_center(idx);
  const long double radius = thm33_radius(d, s) * (1.0L + config::kRelativeSlack);
  const long double c = to_long_double(center);
  const long double base_log = log_of(Rational(pow(s.nu, d), factorial(d)));
  b.lower_log = widen_lower(base_log + log_positive(c - radius));
  b.upper_log = widen_upper(base_log + std::log(c + radius));
  b.preconditions_ok = true;
  report << "3 <= n-m = " << d << " <= nu_m/(2 tau_m); center " << static_cast<double>(c) << ", radius "
         << static_cast<double>(radius);
  if (!b.lower_finite()) {
    report << "; radius exceeds center, lower bound vacuous";
  }
  b.report = report.str();
  return b;
}

BigInt exact_near_diagonal(const Index& idx) {
  const unsigned d = idx.displacement();
  if (d == 1) {
    return scalar_params(idx.n() - 1).nu;
  }
  if (d == 2) {
    const ScalarParams s = scalar_params(idx.n() - 2);
    BigInt twice = s.nu * s.nu + s.tau_sq;
    if (twice % 2 != 0) {
      throw ContractViolation("near-diagonal formula produced a non-integer S" + idx.str());
    }
    return twice / 2;
  }
  throw InvalidIndex("exact_near_diagonal requires n-m in {1,2}, got " + idx.str());
}

Rational expansion_ratio(const Index& idx, unsigned order_cap) {
  const unsigned d = idx.displacement();
  if (d > order_cap) {
    throw OrderCapExceeded("n - m = " + std::to_string(d) + " exceeds the expansion order cap " +
                           std::to_string(order_cap));
  }
  if (d == 0) {
    return 1;
  }
  const ScalarParams s = scalar_params(idx.m());
  const auto mu = central_moments(cumulants(idx.m(), d), d);
  Rational sum = 0;
  BigInt nu_pow = 1;
  for (unsigned j = 0; j <= d; ++j) {
    sum += Rational(binomial(d, j) * mu[j], nu_pow);
    nu_pow *= s.nu;
  }
  return sum;
}

BigInt expansion_exact(const Index& idx, unsigned order_cap) {
  const unsigned d = idx.displacement();
  const Rational ratio = expansion_ratio(idx, order_cap);
  const ScalarParams s = scalar_params(idx.m());
  const Rational value = ratio * Rational(pow(s.nu, d), factorial(d));
  if (denominator(value) != 1) {
    throw ContractViolation("expansion produced a non-integer S" + idx.str());
  }
  return numerator(value);
}

Thm34Endpoints thm34_endpoints(const Index& idx) {
  const unsigned n = idx.n();
  const unsigned m = idx.m();
  Thm34Endpoints e;
  e.upper = Rational(pow(BigInt(m), n), factorial(m));
  e.lower = 0;
  e.remainder = 0;
  if (m < 2) {
    return e;
  }
  const ScalarParams s = scalar_params(m);
  const Rational mh = m * s.H;
  const Rational variance = Rational(m) * m * s.H2 - mh;
  const Rational gap = Rational(n) - mh + 1;
  e.lower_valid = Rational(n) >= mh;
  // A nonpositive gap only occurs outside n >= m H_m; the bound is then vacuous.
  e.remainder = gap > 0 ? variance / (gap * gap) : Rational(1);
  if (e.remainder < 1) {
    e.lower = e.upper * (1 - e.remainder);
  }
  return e;
}

BoundBracket thm34_bracket(const Index& idx) {
  BoundBracket b;
  b.method = Method::Thm34;
  const Thm34Endpoints e = thm34_endpoints(idx);
  b.upper_log = widen_upper(log_of(e.upper));
  std::ostringstream report;
  if (idx.m() < 2) {
    report << "lower bound requires m >= 2";
  } else if (!e.lower_valid) {
    report << "lower bound requires n >= m H_m = " << static_cast<double>(to_long_double(idx.m() * scalar_params(idx.m()).H));
  } else {
    b.preconditions_ok = true;
    b.lower_log = e.lower > 0 ? widen_lower(log_of(e.lower)) : -kInf;
    report << "n >= m H_m; relative remainder " << static_cast<double>(to_long_double(e.remainder));
    if (e.lower == 0) {
      report << ", lower bound vacuous";
    }
  }
  b.report = report.str();
  return b;
}

BoundBracket trivial_upper(const Index& idx) {
  BoundBracket b;
  b.method = Method::TrivialUpper;
  b.lower_log = widen_lower(0.0L);
  b.upper_log = widen_upper(log_of(Rational(pow(BigInt(idx.m()), idx.n()), factorial(idx.m()))));
  b.preconditions_ok = true;
  b.report = "1 <= S(n,m) <= m^n/m!";
  return b;
}

}  // namespace stirling
