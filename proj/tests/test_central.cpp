#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stirling/central.hpp"
#include "stirling/errors.hpp"
#include "stirling/exact_oracles.hpp"
#include "support/oracles.hpp"

using namespace stirling;

TEST(ExpectedW, SpecExamples) {
  EXPECT_NEAR(static_cast<double>(expected_w(1e-12L, 7)), 0.0, 1e-10);
  EXPECT_NEAR(static_cast<double>(expected_w(0.5L, 1)), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(expected_w(0.5L, 2)), 4.0 / 3.0, 1e-15);
}

TEST(SolveTilt, SingleTermClosedForm) {
  const TiltedParams t = solve_tilt(Index(5, 1));
  EXPECT_NEAR(static_cast<double>(t.q), 0.8, 1e-12);
  EXPECT_NEAR(static_cast<double>(t.p), 0.2, 1e-12);
}

TEST(SolveTilt, TwoTermRootCheckedBySubstitution) {
  // (q/2)/(1 - q/2) + q/(1 - q) = 1 rearranges to 3q^2 - 6q + 2 = 0.
  const TiltedParams t = solve_tilt(Index(3, 2));
  const long double q = t.q;
  EXPECT_NEAR(static_cast<double>(q), 1.0 - 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(static_cast<double>((q / 2) / (1 - q / 2) + q / (1 - q)), 1.0, 1e-12);
}

TEST(SolveTilt, DoubleIndexStaysInterior) {
  for (unsigned m : {50u, 200u, 1000u}) {
    const TiltedParams t = solve_tilt(Index(2 * m, m));
    EXPECT_GT(t.q, 0.3L);
    EXPECT_LT(t.q, 0.99L);
    EXPECT_LE(std::fabs(expected_w(t.q, m) - m), 1e-12L * m);
  }
}

TEST(SolveTilt, RejectsDiagonal) { EXPECT_THROW(solve_tilt(Index(4, 4)), InvalidIndex); }

TEST(SolveTilt, ResidualAndVarianceDecompositionOnGrid) {
  for (unsigned n = 3; n <= 300; ++n) {
    for (unsigned m = 2; m < n; ++m) {
      const TiltedParams t = solve_tilt(Index(n, m));
      const long double target = n - m;
      EXPECT_LE(std::fabs(expected_w(t.q, m) - target), 1e-12L * std::max(1.0L, target)) << n << "," << m;
      EXPECT_LE(t.residual, 1e-12L * std::max(1.0L, target));
      EXPECT_EQ(t.sigma_sq_m, t.sigma_sq_m_minus + t.q / (t.p * t.p)) << n << "," << m;
      EXPECT_EQ(t.sigma_sq_m_minus, variance_w_minus(t.q, m));
    }
  }
}

TEST(SolveTilt, TiltIncreasesWithN) {
  for (unsigned m : {2u, 7u, 30u}) {
    long double previous = 0;
    for (unsigned n = m + 1; n <= m + 200; n += 3) {
      const long double q = solve_tilt(Index(n, m)).q;
      EXPECT_GT(q, previous) << n << "," << m;
      previous = q;
    }
  }
}

TEST(Thm45, SpecExamples) {
  for (const Index idx : {Index(60, 20), Index(40, 35), Index(3, 2)}) {
    const BoundBracket b = thm45_bracket(idx);
    ASSERT_TRUE(b.preconditions_ok) << idx.str();
    EXPECT_EQ(b.method, Method::Thm45);
    const long double v = log_of(stirling_exact(idx));
    EXPECT_LE(v, b.upper_log) << idx.str();
    if (b.lower_finite()) {
      EXPECT_LE(b.lower_log, v) << idx.str();
    }
  }
}

TEST(Thm45, ContainmentOnGrid) {
  StirlingRows rows;
  rows.advance();
  for (unsigned n = 2; n <= 150; ++n) {
    rows.advance();
    for (unsigned m = 2; m < n; ++m) {
      const BoundBracket b = thm45_bracket(Index(n, m));
      const long double v = log_of(rows[m]);
      EXPECT_LE(v, b.upper_log) << n << "," << m;
      if (b.lower_finite()) {
        EXPECT_LE(b.lower_log, v) << n << "," << m;
      }
    }
  }
}

// The lower endpoint only becomes positive for large indices; check a few
// there against an inclusion-exclusion oracle.
TEST(Thm45, PositiveLowerEndpointContainsExact) {
  for (const Index idx : {Index(2500, 1775), Index(2600, 1757)}) {
    const BoundBracket b = thm45_bracket(idx);
    ASSERT_TRUE(b.lower_finite()) << idx.str() << " " << b.report;
    const long double v = log_of(oracle::stirling_inclusion_exclusion(idx.n(), idx.m()));
    EXPECT_LE(b.lower_log, v);
    EXPECT_LE(v, b.upper_log);
  }
}

TEST(Thm45, PrefactorMatchesDirectProduct) {
  const Index idx(20, 8);
  const TiltedParams t = solve_tilt(idx);
  long double direct = 20 * std::log(8.0L) - 12 * std::log(t.q);
  for (unsigned j = 1; j <= 8; ++j) {
    direct -= std::log(8 - t.q * j);
  }
  EXPECT_NEAR(static_cast<double>(t.log_prefactor), static_cast<double>(direct), 1e-13);
}

// The absolute error term is of order 1/m along n = m (1 + log m / 2).
TEST(Thm45, AbsoluteErrorTermDecaysLikeInverseM) {
  std::vector<long double> scaled;
  for (unsigned m : {50u, 100u, 200u, 400u}) {
    const unsigned n = static_cast<unsigned>(std::ceil(m * (1 + std::log(m) / 2.0)));
    const TiltedParams t = solve_tilt(Index(n, m));
    const long double half = thm45_relative_half_width(t);
    const long double main_term = 1 / (std::sqrt(t.sigma_sq_m) * std::sqrt(2 * std::numbers::pi_v<long double>));
    scaled.push_back(half * main_term * m);
  }
  const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
  EXPECT_LE(*hi / *lo, 3.0L);
}

TEST(Lemma59, SandwichesHoldOnGrid) {
  for (unsigned n = 3; n <= 150; ++n) {
    for (unsigned m = 2; m < n; ++m) {
      const TiltedParams t = solve_tilt(Index(n, m));
      const TiltSandwich s = lemma59_sandwich(t.q, m);
      const long double ratio = static_cast<long double>(n) / m;
      const long double tol = 1e-12L * ratio;
      EXPECT_LE(s.n_over_m_low, ratio + tol) << n << "," << m;
      EXPECT_GE(s.n_over_m_high, ratio - tol) << n << "," << m;
      const long double vtol = 1e-12L * std::max(1.0L, t.sigma_sq_m_minus);
      EXPECT_LE(s.sigma_minus_low, t.sigma_sq_m_minus + vtol) << n << "," << m;
      EXPECT_GE(s.sigma_minus_high, t.sigma_sq_m_minus - vtol) << n << "," << m;
    }
  }
}

// As q -> 0 the target n/m tends to 1; the endpoints tend to 1 and 1 + 1/m.
TEST(Lemma59, SmallTiltLimit) {
  const TiltSandwich s = lemma59_sandwich(1e-8L, 10);
  EXPECT_NEAR(static_cast<double>(s.n_over_m_low), 1.0, 1e-6);
  EXPECT_NEAR(static_cast<double>(s.n_over_m_high), 1.1, 1e-6);
  EXPECT_LE(s.n_over_m_low, s.n_over_m_high);
}

TEST(CharfnModulus, SpecExamples) {
  EXPECT_EQ(charfn_modulus(0.3L, 5, 0), 1);
  EXPECT_NEAR(static_cast<double>(charfn_modulus(0.5L, 1, std::numbers::pi_v<long double>)), 1.0 / 3.0, 1e-15);
  const long double q = solve_tilt(Index(20, 8)).q;
  const long double direct = oracle::charfn_modulus_direct(q, 8, 1.0L);
  EXPECT_NEAR(static_cast<double>(charfn_modulus(q, 8, 1.0L) / direct), 1.0, 1e-12);
}

TEST(CharfnModulus, MatchesComplexProductOnThetaGrid) {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> q_dist(0.01, 0.99);
  std::uniform_int_distribution<unsigned> m_dist(1, 200);
  for (int trial = 0; trial < 20; ++trial) {
    const long double q = q_dist(gen);
    const unsigned m = m_dist(gen);
    for (int k = 0; k < 64; ++k) {
      const long double theta = -std::numbers::pi_v<long double> + 2 * std::numbers::pi_v<long double> * k / 63;
      const long double a = charfn_modulus(q, m, theta);
      const long double b = oracle::charfn_modulus_direct(q, m, theta);
      EXPECT_NEAR(static_cast<double>(a / b), 1.0, 1e-12) << "q=" << static_cast<double>(q) << " m=" << m;
    }
  }
}
