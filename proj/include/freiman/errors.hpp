#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freiman {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A set (or a derived set such as 2sA) does not fit under the dense limit.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A certified guarantee failed. This is never a recoverable state: either the
// theory or the implementation is wrong.
class DefectError : public Error {
 public:
  using Error::Error;
};

namespace detail {
[[noreturn]] void raise_defect(const char* expr, const char* file, int line, const std::string& msg);
}  // namespace detail

}  // namespace freiman

#define FREIMAN_ENSURE(cond, msg)                                                  \
  do {                                                                             \
    if (!(cond)) ::freiman::detail::raise_defect(#cond, __FILE__, __LINE__, (msg)); \
  } while (0)
