#pragma once

#include <stdexcept>
#include <string>

namespace partperm {

enum class ErrorKind {
  InvalidInput,
  Overflow,
  NotCovered,
  Io,
};

// Every failure raised by the library carries one of the kinds above; the C
// API maps them onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void invalid_input(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

}  // namespace partperm
