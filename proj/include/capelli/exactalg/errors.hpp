#pragma once

#include <stdexcept>
#include <string>

namespace capelli {

// Caller violated a documented precondition (wrong parity, mismatched spec, bad parameter).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator or multi-index is outside the bounds of its ambient space.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A configured resource bound (tensor dimension, term count, time) was exceeded.
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capelli
