#pragma once

#include <stdexcept>
#include <string>

namespace trilink {

/// Malformed or out-of-contract input from a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a fixed size limit (e.g. bracket state count).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A projection or intersection was not generic within tolerance.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trilink
