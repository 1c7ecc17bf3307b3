#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), message_(what), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t pos_;
};

// Raised when an input exceeds the size an operation supports.
class SizeBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hopf
