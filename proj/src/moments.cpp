#include "stirling/moments.hpp"

#include <string>

#include "stirling/errors.hpp"

namespace stirling {

namespace {

// mu_r = sum_{k=1..r} C(r-1, k-1) kappa_k mu_{r-k}
std::vector<BigInt> moments_from_cumulants(const CumulantTable& table, unsigned order, bool centered) {
  if (order > table.r_max()) {
    throw OrderCapExceeded("moment order " + std::to_string(order) + " exceeds cumulant table size " +
                           std::to_string(table.r_max()));
  }
  std::vector<BigInt> mu(order + 1);
  mu[0] = 1;
  std::vector<BigInt> pascal{1};  // row r-1 of Pascal's triangle
  for (unsigned r = 1; r <= order; ++r) {
    if (r > 1) {
      std::vector<BigInt> next(r);
      next[0] = 1;
      next[r - 1] = 1;
      for (unsigned k = 1; k + 1 < r; ++k) {
        next[k] = pascal[k - 1] + pascal[k];
      }
      pascal = std::move(next);
    }
    BigInt acc = 0;
    for (unsigned k = centered ? 2 : 1; k <= r; ++k) {
      acc += pascal[k - 1] * table.kappa(k) * mu[r - k];
    }
    mu[r] = std::move(acc);
  }
  return mu;
}

}  // namespace

ScalarParams scalar_params(unsigned m) {
  ScalarParams s;
  s.m = m;
  const BigInt mm = m;
  s.nu = mm * (mm + 1) / 2;
  s.tau_sq = mm * (mm + 1) * (2 * mm + 1) / 6;
  s.H = 0;
  s.H2 = 0;
  for (unsigned j = 1; j <= m; ++j) {
    s.H += Rational(1, j);
    s.H2 += Rational(BigInt(1), BigInt(j) * j);
  }
  return s;
}

CumulantTable cumulants(unsigned m, unsigned r_max) {
  std::vector<BigInt> powers(m);
  for (unsigned j = 0; j < m; ++j) {
    powers[j] = 1;
  }
  std::vector<BigInt> kappa;
  kappa.reserve(r_max);
  BigInt fact = 1;  // (r-1)!
  for (unsigned r = 1; r <= r_max; ++r) {
    if (r > 1) {
      fact *= r - 1;
    }
    BigInt power_sum = 0;
    for (unsigned j = 0; j < m; ++j) {
      powers[j] *= j + 1;
      power_sum += powers[j];
    }
    kappa.push_back(fact * power_sum);
  }
  return CumulantTable(m, std::move(kappa));
}

std::vector<BigInt> raw_moments(const CumulantTable& table, unsigned order) {
  return moments_from_cumulants(table, order, false);
}

std::vector<BigInt> central_moments(const CumulantTable& table, unsigned order) {
  return moments_from_cumulants(table, order, true);
}

}  // namespace stirling
