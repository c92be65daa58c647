#ifndef CORECALC_ERRORS_HPP
#define CORECALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corecalc {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on malformed polynomial text or input files; carries a 0-based
// character position when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a documented precondition is violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace corecalc

#endif  // CORECALC_ERRORS_HPP
