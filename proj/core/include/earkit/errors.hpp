#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace earkit {

/// Malformed or out-of-contract input (bad labels, face not in complex, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or work budget would be exceeded; nothing was computed.
class GuardRefusal : public std::runtime_error {
 public:
  GuardRefusal(const std::string& what, std::size_t bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// A constructed object failed its own verification step.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace earkit
