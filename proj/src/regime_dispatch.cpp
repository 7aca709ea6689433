#include "stirling/regime_dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stirling/central.hpp"
#include "stirling/exact_oracles.hpp"
#include "stirling/moments.hpp"
#include "stirling/noncentral.hpp"

namespace stirling {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::ExactTrivial: return "EXACT_TRIVIAL";
    case Regime::NearDiagonal: return "NEAR_DIAGONAL";
    case Regime::Case1HighM: return "CASE1_HIGH_M";
    case Regime::Case2SmallM: return "CASE2_SMALL_M";
    case Regime::Case3Central: return "CASE3_CENTRAL";
    case Regime::Case4Boundary: return "CASE4_BOUNDARY";
  }
  return "UNKNOWN";
}

namespace {

struct Classification {
  Regime label;
  std::string rationale;
};

Classification classify_with_rationale(const Index& idx) {
  const unsigned n = idx.n();
  const unsigned m = idx.m();
  const unsigned d = idx.displacement();
  std::ostringstream why;
  if (m == 1 || m == n) {
    why << "m in {1, n}: S = 1";
    return {Regime::ExactTrivial, why.str()};
  }
  if (d <= 2) {
    why << "n-m = " << d << ": closed form";
    return {Regime::NearDiagonal, why.str()};
  }
  const ScalarParams s = scalar_params(m);
  if (BigInt(4) * d * d * s.tau_sq <= s.nu * s.nu) {
    why << "3 <= n-m = " << d << " <= nu_m/(2 tau_m)";
    return {Regime::Case1HighM, why.str()};
  }
  const Rational mh = m * s.H;
  if (Rational(n) >= mh + m) {
    why << "n >= m H_m + m = " << static_cast<double>(to_long_double(mh + m));
    return {Regime::Case2SmallM, why.str()};
  }
  const long double mm = m;
  const long double centre = mm * std::log(mm);
  if (std::fabs(static_cast<long double>(d) - centre) <= mm) {
    why << "|n-m - m log m| = " << static_cast<double>(std::fabs(d - centre)) << " <= m";
    return {Regime::Case4Boundary, why.str()};
  }
  why << "central remainder: n-m = " << d << ", m log m = " << static_cast<double>(centre);
  return {Regime::Case3Central, why.str()};
}

BoundBracket exact_bracket(const BigInt& value, Method method) {
  BoundBracket b;
  b.method = method;
  b.lower_log = b.upper_log = log_of(value);
  b.preconditions_ok = true;
  b.report = "exact value " + to_decimal(value);
  return b;
}

bool narrower(const BoundBracket& a, const BoundBracket& b) {
  const long double wa = a.width();
  const long double wb = b.width();
  if (wa != wb) {
    return wa < wb;
  }
  return precedence(a.method) < precedence(b.method);
}

}  // namespace

Regime classify(const Index& idx) { return classify_with_rationale(idx).label; }

std::string classification_rationale(const Index& idx) { return classify_with_rationale(idx).rationale; }

DispatchReport best_bracket(const Index& idx, bool verify) {
  const Classification c = classify_with_rationale(idx);
  DispatchReport report{idx, c.label, c.rationale, {}, {}, std::nullopt};
  const unsigned d = idx.displacement();

  if (idx.m() == 1 || d == 0) {
    report.exact = BigInt(1);
    report.brackets.push_back(exact_bracket(1, Method::Exact));
  } else if (d <= 2) {
    report.exact = exact_near_diagonal(idx);
    report.brackets.push_back(exact_bracket(*report.exact, d == 1 ? Method::ExactNm1 : Method::ExactNm2));
  } else {
    report.brackets.push_back(thm33_bracket(idx));
    report.brackets.push_back(thm34_bracket(idx));
    report.brackets.push_back(thm45_bracket(idx));
    report.brackets.push_back(trivial_upper(idx));

    // A vacuous central lower bound borrows the best certified lower bound
    // among the other candidates.
    BoundBracket& central = report.brackets[2];
    if (central.preconditions_ok && !central.lower_finite()) {
      long double best_lower = -std::numeric_limits<long double>::infinity();
      for (const BoundBracket& b : report.brackets) {
        if (&b != &central && b.preconditions_ok) {
          best_lower = std::max(best_lower, b.lower_log);
        }
      }
      central.lower_log = best_lower;
      central.report += "; lower bound taken from the best other certified candidate";
    }
  }

  const BoundBracket* chosen = nullptr;
  for (const BoundBracket& b : report.brackets) {
    if (b.preconditions_ok && (chosen == nullptr || narrower(b, *chosen))) {
      chosen = &b;
    }
  }
  report.chosen = *chosen;

  if (verify) {
    const BigInt exact = stirling_exact(idx);
    if (report.exact && *report.exact != exact) {
      throw ContainmentViolation("exact path disagrees with the recurrence at " + idx.str());
    }
    const long double log_exact = log_of(exact);
    for (const BoundBracket& b : report.brackets) {
      if (b.preconditions_ok && !b.contains_log(log_exact)) {
        throw ContainmentViolation(std::string(to_string(b.method)) + " bracket misses S" + idx.str());
      }
    }
    report.exact = exact;
  }
  return report;
}

}  // namespace stirling
