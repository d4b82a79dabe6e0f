#pragma once

#include <stdexcept>
#include <string>

namespace cn {

enum class ErrorKind {
  Syntax,
  InvalidPosition,
  IllFormed,
  IllTyped,
  SizeLimitExceeded,
  ExponentClash,
  NotConstructorNumber,
  UndeclaredFunction,
  ArityMismatch,
  DomainMismatch,
  Validation,
  Refused,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cn
