#include "stirling/exact_oracles.hpp"

#include <algorithm>

#include "stirling/errors.hpp"
#include "stirling/moments.hpp"

namespace stirling {

BigInt stirling_exact(const Index& idx) {
  const unsigned n = idx.n();
  const unsigned m = idx.m();
  std::vector<BigInt> row(m + 1);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned k = std::min(i, m); k >= 1; --k) {
      row[k] = k * row[k] + row[k - 1];
    }
    row[0] = 0;
  }
  return row[m];
}

void StirlingRows::advance() {
  const unsigned next = n() + 1;
  row_.emplace_back(0);
  for (unsigned k = next; k >= 1; --k) {
    row_[k] = k * row_[k] + row_[k - 1];
  }
  row_[0] = 0;
}

BigInt stirling_via_moments(const Index& idx, unsigned order_cap) {
  const unsigned d = idx.displacement();
  if (d > order_cap) {
    throw OrderCapExceeded("n - m = " + std::to_string(d) + " exceeds the moment order cap " +
                           std::to_string(order_cap));
  }
  if (d == 0) {
    return 1;
  }
  const auto mu = raw_moments(cumulants(idx.m(), d), d);
  BigInt q, r;
  divide_qr(mu[d], factorial(d), q, r);
  if (r != 0) {
    throw ContractViolation("moment route produced a non-integer S" + idx.str());
  }
  return q;
}

std::vector<Rational> geometric_sum_pmf_exact(std::span<const Rational> failure_probs, unsigned k_max) {
  std::vector<Rational> pmf(k_max + 1);
  pmf[0] = 1;
  // Convolution with a geometric law: new[k] = p old[k] + q new[k-1].
  for (const Rational& q : failure_probs) {
    const Rational p = 1 - q;
    Rational prev = 0;
    for (unsigned k = 0; k <= k_max; ++k) {
      Rational cur = p * pmf[k];
      if (k > 0) {
        cur += q * prev;
      }
      pmf[k] = cur;
      prev = std::move(cur);
    }
  }
  return pmf;
}

RationalCdfTable geometric_sum_cdf_exact(unsigned m, unsigned k_max) {
  if (m < 2) {
    throw InvalidIndex("geometric_sum_cdf_exact requires m >= 2");
  }
  std::vector<Rational> probs;
  probs.reserve(m - 1);
  for (unsigned j = 1; j < m; ++j) {
    probs.emplace_back(j, m);
  }
  const auto pmf = geometric_sum_pmf_exact(probs, k_max);
  RationalCdfTable table{m, k_max, {}};
  table.entries.reserve(k_max + 1);
  Rational acc = 0;
  for (const Rational& p : pmf) {
    acc += p;
    table.entries.push_back(acc);
  }
  return table;
}

BigInt stirling_via_probability(const Index& idx) {
  if (idx.m() < 2) {
    throw InvalidIndex("probability route requires m >= 2, got " + idx.str());
  }
  const auto table = geometric_sum_cdf_exact(idx.m(), idx.displacement());
  const Rational value = Rational(pow(BigInt(idx.m()), idx.n()), factorial(idx.m())) * table.entries.back();
  if (denominator(value) != 1) {
    throw ContractViolation("probability route produced a non-integer S" + idx.str());
  }
  return numerator(value);
}

bool verify_defining_identity(unsigned n) {
  StirlingRows rows;
  while (rows.n() < n) {
    rows.advance();
  }
  for (unsigned k = 0; k <= n; ++k) {
    BigInt lhs = 0;
    BigInt falling = 1;  // (k)_j
    for (unsigned j = 0; j <= n; ++j) {
      lhs += rows[j] * falling;
      falling *= static_cast<long>(k) - static_cast<long>(j);
    }
    if (lhs != pow(BigInt(k), n)) {
      return false;
    }
  }
  return true;
}

}  // namespace stirling
