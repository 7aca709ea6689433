#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

/// Index outside 1 <= m <= n, or outside an operation's admissible range.
class InvalidIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem-guaranteed property failed to hold; always an implementation bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OrderCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PowerTooLarge : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stirling
