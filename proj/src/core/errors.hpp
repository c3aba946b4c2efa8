#pragma once

#include <stdexcept>

namespace monkey {

// Caller input violated a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured resource limit (memory budget,
// count cap, 64-bit overflow).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematically guaranteed invariant failed at runtime. Reserved for
// inequalities the model proves; seeing one means a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monkey
