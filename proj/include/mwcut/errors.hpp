#pragma once

#include <stdexcept>
#include <string>

namespace mwcut {

// Malformed input or a violated precondition on caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested quantity does not exist (no finite cut, LP without feasible points).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug or a non-optimal input to a routine that requires one.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mwcut
