#pragma once

#include <string>

namespace stirling {

/// Argument (n, m) of S(n, m) with 1 <= m <= n. Construction validates.
class Index {
 public:
  Index(long long n, long long m);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  /// n - m, the exponent of the moment representation.
  unsigned displacement() const { return n_ - m_; }

  std::string str() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  unsigned n_;
  unsigned m_;
};

}  // namespace stirling
