#pragma once

#include <stdexcept>
#include <string>

namespace reprings {

// Malformed or out-of-contract input: bad literals, invalid ranks,
// violated preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or Buchberger loop hit its configured cap. Exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (e.g. a Weyl numerator that does not divide).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace reprings
