#pragma once

#include <stdexcept>
#include <string>

namespace inhomcs {

// Error kinds surfaced by the library. All derive from std exceptions so
// callers that do not care about the distinction can catch std::exception.

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rewrite or procedure was asked for at a site where it does not apply.
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating-point geometry hit a (near-)singular configuration.
class NumericalDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (files, JSON documents).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace inhomcs
