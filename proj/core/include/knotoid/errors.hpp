#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotoid {

// Malformed text input; position is a byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace knotoid
