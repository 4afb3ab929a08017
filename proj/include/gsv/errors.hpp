#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsv {

/// Malformed text input. `position()` is the 0-based offset of the first bad
/// character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " (at position " +
                              std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration would exceed a configured cap or budget.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two objects that must agree on (agents, alternatives) do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that is only defined for tops-only rules got another rule.
class NotTopsOnly : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's hypothesis on its rule argument does not hold.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gsv
