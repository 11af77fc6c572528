#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclifford {

// Division by a polynomial that vanishes identically, or a pole hit when a
// rational function is evaluated at a point.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text that does not follow the rational-function grammar or a JSON schema.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A size guard (mode count, Fock dimension) was exceeded.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qclifford
