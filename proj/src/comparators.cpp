#include "stirling/comparators.hpp"

#include <cmath>
#include <numbers>

#include "stirling/config.hpp"
#include "stirling/errors.hpp"

namespace stirling {

std::string_view to_string(ComparatorMethod method) {
  switch (method) {
    case ComparatorMethod::JordanSmallM: return "JORDAN_SMALL_M";
    case ComparatorMethod::JordanLargeM: return "JORDAN_LARGE_M";
    case ComparatorMethod::RennieDobson: return "RENNIE_DOBSON";
    case ComparatorMethod::MoserWyman: return "MOSER_WYMAN";
  }
  return "UNKNOWN";
}

long double log_factorial(unsigned n) {
  if (n <= 10000) {
    return n < 2 ? 0.0L : log_of(factorial(n));
  }
  return std::lgamma(static_cast<long double>(n) + 1.0L);
}

JordanEstimates jordan_estimates(const Index& idx) {
  const unsigned n = idx.n();
  const unsigned m = idx.m();
  const unsigned d = idx.displacement();
  JordanEstimates j;
  j.small_m.method = ComparatorMethod::JordanSmallM;
  j.small_m.value_log = n * std::log(static_cast<long double>(m)) - log_factorial(m);
  j.large_m.method = ComparatorMethod::JordanLargeM;
  j.large_m.value_log = 2.0L * d * std::log(static_cast<long double>(n)) - d * std::log(2.0L) - log_factorial(d);
  return j;
}

RennieDobsonEndpoints rennie_dobson_endpoints(const Index& idx) {
  if (idx.m() == idx.n()) {
    throw InvalidIndex("Rennie-Dobson bracket requires m <= n-1, got " + idx.str());
  }
  const BigInt m = idx.m();
  const unsigned d = idx.displacement();
  RennieDobsonEndpoints e;
  e.lower = Rational((m * m + m + 2) * pow(m, d - 1), BigInt(2)) - 1;
  e.upper = Rational(binomial(idx.n(), idx.m()) * pow(m, d), BigInt(2));
  return e;
}

ComparatorValue rennie_dobson_bracket(const Index& idx) {
  const RennieDobsonEndpoints e = rennie_dobson_endpoints(idx);
  ComparatorValue v;
  v.method = ComparatorMethod::RennieDobson;
  v.certified = true;
  v.lower_log = e.lower > 0 ? log_of(e.lower) : -std::numeric_limits<long double>::infinity();
  v.upper_log = log_of(e.upper);
  v.value_log = e.lower > 0 ? (*v.lower_log + *v.upper_log) / 2 : *v.upper_log;
  return v;
}

namespace {

// R / (1 - e^{-R}), equal to 1 in the limit R -> 0.
long double mw_lhs(long double r) {
  if (r < 1e-12L) {
    return 1.0L + r / 2;
  }
  return r / -std::expm1(-r);
}

// (e^R - 1 - R) by series for small R.
long double expm1_minus_r(long double r) {
  if (r < 1e-3L) {
    return r * r * (0.5L + r * (1.0L / 6 + r * (1.0L / 24 + r / 120)));
  }
  return std::expm1(r) - r;
}

}  // namespace

long double moser_wyman_r(long double ratio) {
  if (!(ratio > 1.0L)) {
    throw InvalidIndex("Moser-Wyman equation requires n/m > 1");
  }
  long double lo = 0;
  long double hi = ratio + 1;  // lhs(R) > R
  for (int step = 0; step < 400; ++step) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) {
      break;
    }
    (mw_lhs(mid) < ratio ? lo : hi) = mid;
    if (hi - lo <= 1e-15L * hi) {
      break;
    }
  }
  const long double r = lo + (hi - lo) / 2;
  if (std::fabs(mw_lhs(r) - ratio) > 1e-12L * ratio) {
    throw NoConvergence("Moser-Wyman equation did not converge");
  }
  return r;
}

ComparatorValue moser_wyman_leading(const Index& idx) {
  if (idx.m() == idx.n()) {
    throw InvalidIndex("Moser-Wyman estimate requires m < n, got " + idx.str());
  }
  const long double n = idx.n();
  const long double m = idx.m();
  const long double r = moser_wyman_r(n / m);
  const long double em1 = std::expm1(r);
  const long double h = std::exp(r) * expm1_minus_r(r) / (2.0L * em1 * em1);
  ComparatorValue v;
  v.method = ComparatorMethod::MoserWyman;
  v.value_log = log_factorial(idx.n()) + m * std::log(em1) - std::log(2.0L) - n * std::log(r) -
                log_factorial(idx.m()) - 0.5L * std::log(std::numbers::pi_v<long double> * m * r * h);
  return v;
}

}  // namespace stirling
