#include <gtest/gtest.h>

#include <cmath>

#include "stirling/comparators.hpp"
#include "stirling/errors.hpp"
#include "stirling/exact_oracles.hpp"

using namespace stirling;

namespace {

double relative_error(long double value_log, const BigInt& exact) {
  return static_cast<double>(std::fabs(std::expm1(value_log - log_of(exact))));
}

// Independent solver for R / (1 - e^{-R}) = ratio: fixed-point iteration
// R = ratio (1 - e^{-R}), which contracts near the positive root.
double moser_wyman_fixed_point(double ratio) {
  double r = ratio;
  for (int i = 0; i < 10000; ++i) {
    r = ratio * -std::expm1(-r);
  }
  return r;
}

}  // namespace

TEST(Jordan, SpecExamples) {
  const JordanEstimates small = jordan_estimates(Index(100, 2));
  EXPECT_NEAR(static_cast<double>(small.small_m.value_log), 99 * std::log(2.0), 1e-9);
  EXPECT_LT(relative_error(small.small_m.value_log, stirling_exact(Index(100, 2))), 0.01);
  EXPECT_FALSE(small.small_m.certified);

  const JordanEstimates large = jordan_estimates(Index(100, 99));
  EXPECT_NEAR(static_cast<double>(large.large_m.value_log), std::log(5000.0), 1e-9);
  EXPECT_EQ(stirling_exact(Index(100, 99)), 4950);

  const JordanEstimates diag = jordan_estimates(Index(9, 9));
  EXPECT_TRUE(std::isfinite(static_cast<double>(diag.small_m.value_log)));
  EXPECT_EQ(diag.large_m.value_log, 0);
}

TEST(Jordan, SmallMErrorDecreasesInN) {
  double previous = INFINITY;
  for (unsigned n : {20u, 40u, 80u, 160u}) {
    const double e = relative_error(jordan_estimates(Index(n, 3)).small_m.value_log, stirling_exact(Index(n, 3)));
    EXPECT_LT(e, previous) << n;
    previous = e;
  }
}

TEST(RennieDobson, SpecExamples) {
  const RennieDobsonEndpoints a = rennie_dobson_endpoints(Index(4, 2));
  EXPECT_EQ(a.lower, 7);
  EXPECT_EQ(a.upper, 12);
  const RennieDobsonEndpoints b = rennie_dobson_endpoints(Index(5, 4));
  EXPECT_EQ(b.lower, 10);
  EXPECT_EQ(b.upper, 10);
  const ComparatorValue v = rennie_dobson_bracket(Index(4, 2));
  EXPECT_TRUE(v.certified);
  ASSERT_TRUE(v.lower_log && v.upper_log);
  EXPECT_LE(*v.lower_log, *v.upper_log);
  EXPECT_THROW(rennie_dobson_bracket(Index(4, 4)), InvalidIndex);
}

TEST(RennieDobson, ContainmentOnGrid) {
  StirlingRows rows;
  for (unsigned n = 1; n <= 150; ++n) {
    rows.advance();
    for (unsigned m = 1; m < n; ++m) {
      const RennieDobsonEndpoints e = rennie_dobson_endpoints(Index(n, m));
      const Rational exact(rows[m]);
      EXPECT_LE(e.lower, exact) << n << "," << m;
      EXPECT_LE(exact, e.upper) << n << "," << m;
    }
  }
}

TEST(MoserWyman, RootMatchesIndependentSolver) {
  EXPECT_NEAR(static_cast<double>(moser_wyman_r(2.0L)), moser_wyman_fixed_point(2.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(moser_wyman_r(2.0L)), 1.5936, 1e-4);
  EXPECT_NEAR(static_cast<double>(moser_wyman_r(5.0L)), moser_wyman_fixed_point(5.0), 1e-9);
}

TEST(MoserWyman, SmallRatioStaysFinite) {
  const long double r = moser_wyman_r(1.0L + 1e-12L);
  EXPECT_GE(r, 0);
  EXPECT_LT(r, 1e-10L);
  const ComparatorValue v = moser_wyman_leading(Index(1001, 1000));
  EXPECT_TRUE(std::isfinite(static_cast<double>(v.value_log)));
  EXPECT_THROW(moser_wyman_leading(Index(5, 5)), InvalidIndex);
}

TEST(MoserWyman, SpecExampleWithinFivePercent) {
  const ComparatorValue v = moser_wyman_leading(Index(60, 20));
  EXPECT_FALSE(v.certified);
  EXPECT_LT(relative_error(v.value_log, stirling_exact(Index(60, 20))), 0.05);
}

TEST(MoserWyman, ErrorShrinksAsMDoubles) {
  double previous = INFINITY;
  for (unsigned m : {10u, 20u, 40u}) {
    const double e = relative_error(moser_wyman_leading(Index(3 * m, m)).value_log, stirling_exact(Index(3 * m, m)));
    EXPECT_LT(e, previous) << m;
    previous = e;
  }
}

TEST(LogFactorial, MatchesBothBranches) {
  EXPECT_EQ(log_factorial(0), 0);
  EXPECT_NEAR(static_cast<double>(log_factorial(10)), std::log(3628800.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(log_factorial(20000)), std::lgamma(20001.0), 1e-6);
}
