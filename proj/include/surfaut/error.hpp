#pragma once

#include <stdexcept>
#include <string>

namespace surfaut {

// Raised for malformed input or a violated precondition. The CLI maps it to
// exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCoprime : public InputError {
 public:
  using InputError::InputError;
};

// A required congruence (e.g. 12 | c1^2 + c2) does not hold.
class CongruenceError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace surfaut
