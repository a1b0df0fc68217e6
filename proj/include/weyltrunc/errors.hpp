#pragma once

#include <stdexcept>
#include <string>

namespace weyltrunc {

// Invalid user configuration: bad (type, rank), bad p, bad flags.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed a configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its domain (e.g. a weight not in pY).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mathematical invariant that must hold failed to hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace weyltrunc
