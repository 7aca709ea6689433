#include <gtest/gtest.h>

#include <cmath>

#include "stirling/errors.hpp"
#include "stirling/exact_oracles.hpp"
#include "stirling/moments.hpp"
#include "stirling/noncentral.hpp"

using namespace stirling;

namespace {

::testing::AssertionResult contains(const BoundBracket& b, const BigInt& exact) {
  const long double v = log_of(exact);
  if (b.lower_log <= v && v <= b.upper_log) {
    return ::testing::AssertionSuccess();
  }
  return ::testing::AssertionFailure() << to_string(b.method) << " [" << static_cast<double>(b.lower_log) << ", "
                                       << static_cast<double>(b.upper_log) << "] misses " << static_cast<double>(v);
}

}  // namespace

TEST(Thm33, ContainsExactValueOnSpecExamples) {
  for (const Index idx : {Index(103, 100), Index(53, 50)}) {
    const BoundBracket b = thm33_bracket(idx);
    ASSERT_TRUE(b.preconditions_ok) << b.report;
    EXPECT_EQ(b.method, Method::Thm33);
    EXPECT_TRUE(contains(b, stirling_exact(idx)));
  }
}

TEST(Thm33, CenterMatchesClosedForm) {
  // C = 1 + 3 tau^2 / nu^2 for n - m = 3.
  EXPECT_EQ(thm33_center(Index(103, 100)), 1 + Rational(3 * 338350, 5050 * 5050));
}

TEST(Thm33, PreconditionFailsAwayFromDiagonal) {
  const BoundBracket b = thm33_bracket(Index(10, 3));
  EXPECT_FALSE(b.preconditions_ok);
  EXPECT_FALSE(b.report.empty());
  EXPECT_FALSE(thm33_bracket(Index(12, 10)).preconditions_ok);  // d = 2
}

TEST(Thm33, RelativeRadiusShrinksAlongFixedDisplacement) {
  long double previous = INFINITY;
  for (unsigned m : {25u, 50u, 100u, 200u}) {
    const long double r = thm33_relative_radius(Index(m + 3, m));
    const ScalarParams s = scalar_params(m);
    const long double tau = std::sqrt(to_long_double(s.tau_sq));
    const long double ratio = 6 * tau / to_long_double(s.nu);
    EXPECT_LT(r, previous) << m;
    EXPECT_LE(r, 2 * std::exp(0.25L) * ratio * ratio * ratio * (1 + 1e-6L)) << m;
    previous = r;
  }
}

TEST(ExactNearDiagonal, SpecExamples) {
  EXPECT_EQ(exact_near_diagonal(Index(10, 9)), 45);
  EXPECT_EQ(exact_near_diagonal(Index(10, 8)), 750);
  EXPECT_EQ(exact_near_diagonal(Index(2, 1)), 1);
  EXPECT_THROW(exact_near_diagonal(Index(10, 7)), InvalidIndex);
  EXPECT_THROW(exact_near_diagonal(Index(10, 10)), InvalidIndex);
}

TEST(ExactNearDiagonal, MatchesRecurrence) {
  for (unsigned n = 2; n <= 120; ++n) {
    EXPECT_EQ(exact_near_diagonal(Index(n, n - 1)), stirling_exact(Index(n, n - 1)));
    if (n >= 3) {
      EXPECT_EQ(exact_near_diagonal(Index(n, n - 2)), stirling_exact(Index(n, n - 2)));
    }
  }
}

TEST(Expansion, SpecExamples) {
  EXPECT_EQ(expansion_exact(Index(5, 4)), 10);
  EXPECT_EQ(expansion_exact(Index(8, 5)), 1050);
  EXPECT_EQ(expansion_exact(Index(8, 6)), 266);
  EXPECT_EQ(expansion_exact(Index(9, 9)), 1);
  EXPECT_THROW(expansion_exact(Index(30, 2), 10), OrderCapExceeded);
}

TEST(Expansion, AgreesWithRecurrenceOnGrid) {
  StirlingRows rows;
  for (unsigned n = 1; n <= 50; ++n) {
    rows.advance();
    for (unsigned m = 1; m <= n; ++m) {
      EXPECT_EQ(expansion_exact(Index(n, m)), rows[m]) << n << "," << m;
    }
  }
}

TEST(Thm34, SpecExamples) {
  const Thm34Endpoints e = thm34_endpoints(Index(100, 3));
  ASSERT_TRUE(e.lower_valid);
  EXPECT_EQ(e.remainder, Rational(27, 4) / (Rational(191, 2) * Rational(191, 2)));
  EXPECT_EQ(e.upper, Rational(BigInt(3) * pow(BigInt(3), 99), 6));
  EXPECT_LE(e.lower, Rational(stirling_exact(Index(100, 3))));
  EXPECT_LE(Rational(stirling_exact(Index(100, 3))), e.upper);
  EXPECT_TRUE(contains(thm34_bracket(Index(100, 3)), stirling_exact(Index(100, 3))));

  const BoundBracket five_two = thm34_bracket(Index(5, 2));
  EXPECT_TRUE(five_two.preconditions_ok);
  EXPECT_TRUE(contains(five_two, 15));
}

TEST(Thm34, UpperAlwaysValidLowerNeedsPrecondition) {
  // 3 < 3 H_3 = 5.5, so only the upper endpoint is certified.
  const BoundBracket b = thm34_bracket(Index(5, 3));
  EXPECT_FALSE(b.preconditions_ok);
  EXPECT_TRUE(std::isfinite(static_cast<double>(b.upper_log)));
  EXPECT_GE(b.upper_log, log_of(BigInt(25)));
  EXPECT_FALSE(thm34_bracket(Index(7, 1)).preconditions_ok);
}

TEST(Thm34, BoundaryDecidedExactly) {
  // n = m H_m exactly at m = 2: H_2 = 3/2, 2 H_2 = 3.
  EXPECT_TRUE(thm34_endpoints(Index(3, 2)).lower_valid);
  // m = 4: 4 H_4 = 25/3, so n = 8 fails and n = 9 passes.
  EXPECT_FALSE(thm34_endpoints(Index(8, 4)).lower_valid);
  EXPECT_TRUE(thm34_endpoints(Index(9, 4)).lower_valid);
}

TEST(Thm34, RemainderDecaysLikeInverseSquare) {
  std::vector<long double> scaled;
  for (unsigned n : {50u, 100u, 200u, 400u}) {
    const long double r = to_long_double(thm34_endpoints(Index(n, 5)).remainder);
    scaled.push_back(r * n * n);
  }
  const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
  EXPECT_LE(*hi / *lo, 2.0L);
}

TEST(TrivialUpper, SpecExamples) {
  EXPECT_NEAR(static_cast<double>(trivial_upper(Index(3, 3)).upper_log), std::log(4.5), 1e-8);
  EXPECT_NEAR(static_cast<double>(trivial_upper(Index(4, 2)).upper_log), std::log(8.0), 1e-8);
  const BoundBracket one = trivial_upper(Index(1, 1));
  EXPECT_NEAR(static_cast<double>(one.upper_log), 0.0, 1e-8);
  EXPECT_TRUE(one.preconditions_ok);
  EXPECT_TRUE(one.contains_log(0));
  EXPECT_LE(one.lower_log, 0);
}

TEST(NoncentralBrackets, ContainmentOnGrid) {
  StirlingRows rows;
  for (unsigned n = 1; n <= 200; ++n) {
    rows.advance();
    for (unsigned m = 1; m <= n; ++m) {
      const Index idx(n, m);
      const BigInt& exact = rows[m];
      const BoundBracket t34 = thm34_bracket(idx);
      // Upper endpoint is certified for every index.
      EXPECT_LE(log_of(exact), t34.upper_log) << idx.str();
      if (t34.preconditions_ok) {
        EXPECT_TRUE(contains(t34, exact)) << idx.str();
      }
      EXPECT_TRUE(contains(trivial_upper(idx), exact)) << idx.str();
      if (n - m >= 3) {
        const BoundBracket t33 = thm33_bracket(idx);
        if (t33.preconditions_ok) {
          EXPECT_LE(t33.lower_log, t33.upper_log);
          EXPECT_TRUE(contains(t33, exact)) << idx.str();
        }
      }
    }
  }
}
