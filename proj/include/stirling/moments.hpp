#pragma once

#include <vector>

#include "stirling/big.hpp"

// Exact moment machinery for S_m = T_1 + 2 T_2 + ... + m T_m with T_j
// independent unit exponentials. The cumulant generating function is
// -sum_j log(1 - j z), so the r-th cumulant is (r-1)! * sum_j j^r and every
// cumulant and moment is an integer.

namespace stirling {

struct ScalarParams {
  unsigned m = 0;
  BigInt nu;       // m(m+1)/2, the mean of S_m
  BigInt tau_sq;   // m(m+1)(2m+1)/6, the variance of S_m
  Rational H;      // harmonic number H_m
  Rational H2;     // second-order harmonic number H_{m,2}
};

ScalarParams scalar_params(unsigned m);

class CumulantTable {
 public:
  CumulantTable(unsigned m, std::vector<BigInt> kappa) : m_(m), kappa_(std::move(kappa)) {}

  unsigned m() const { return m_; }
  unsigned r_max() const { return static_cast<unsigned>(kappa_.size()); }
  /// r-th cumulant, 1 <= r <= r_max().
  const BigInt& kappa(unsigned r) const { return kappa_.at(r - 1); }

 private:
  unsigned m_;
  std::vector<BigInt> kappa_;
};

/// kappa_r = (r-1)! * sum_{j=1..m} j^r for r = 1..r_max.
CumulantTable cumulants(unsigned m, unsigned r_max);

/// Raw moments E S_m^r for r = 0..order. Throws OrderCapExceeded when
/// order > table.r_max().
std::vector<BigInt> raw_moments(const CumulantTable& table, unsigned order);

/// Central moments E (S_m - nu_m)^r for r = 0..order, same recursion with
/// kappa_1 replaced by zero.
std::vector<BigInt> central_moments(const CumulantTable& table, unsigned order);

}  // namespace stirling
