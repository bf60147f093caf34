#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leafcert {

// Malformed external input (graph6 text, corpus lines).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Precondition violated by the caller: disconnected graph where connectivity
// is required, parameter outside its window, and so on.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance is larger than an exhaustive routine is configured to handle.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace leafcert
