#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comono {

/// Precondition violated by a caller-supplied value.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An F2-event references atoms the model does not know, or is malformed.
class InvalidEvent : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace comono
