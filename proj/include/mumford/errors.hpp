#pragma once

#include <stdexcept>
#include <string>

namespace mumford {

// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input data (a surface model, a workspace file) is malformed or fails validation.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs are individually valid but jointly inconsistent, e.g. a charge lands
// outside the region allowed for objects of the heart.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mumford
