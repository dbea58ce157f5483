#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootfunc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different variable contexts, fields, or arities.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A value that is not a valid element of the declared field (or a bad modulus).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// No unit bounded root functional exists at the requested epsilon.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// The reduction iteration did not reach a fixed point within its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

}  // namespace rootfunc
