#include "stirling/index.hpp"

#include <cstdlib>
#include <limits>

#include "stirling/config.hpp"
#include "stirling/errors.hpp"

namespace stirling {

Index::Index(long long n, long long m) {
  if (n < 1 || m < 1 || m > n || n > std::numeric_limits<int>::max()) {
    throw InvalidIndex("invalid index (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                       "): requires 1 <= m <= n");
  }
  n_ = static_cast<unsigned>(n);
  m_ = static_cast<unsigned>(m);
}

std::string Index::str() const {
  return "(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
}

namespace config {

unsigned exact_cap_from_env() {
  const char* raw = std::getenv("STIRLING_EXACT_CAP");
  if (raw == nullptr || *raw == '\0') {
    return kExactCap;
  }
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > std::numeric_limits<int>::max()) {
    return kExactCap;
  }
  return static_cast<unsigned>(v);
}

}  // namespace config

}  // namespace stirling
