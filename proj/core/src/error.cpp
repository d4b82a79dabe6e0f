#include "cn/config.hpp"
#include "cn/error.hpp"

#include <string>

namespace cn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::InvalidPosition: return "invalid position";
    case ErrorKind::IllFormed: return "ill-formed";
    case ErrorKind::IllTyped: return "ill-typed";
    case ErrorKind::SizeLimitExceeded: return "size limit exceeded";
    case ErrorKind::ExponentClash: return "exponent clash";
    case ErrorKind::NotConstructorNumber: return "not a constructor number";
    case ErrorKind::UndeclaredFunction: return "undeclared function";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::DomainMismatch: return "domain mismatch";
    case ErrorKind::Validation: return "invalid program";
    case ErrorKind::Refused: return "refused";
  }
  return "error";
}

void EngineConfig::validate() const {
  if (limit < 3) throw Error(ErrorKind::Validation, "limit must be at least 3, got " + std::to_string(limit));
  if (maxStates == 0) throw Error(ErrorKind::Validation, "maxStates must be positive");
  if (maxTermSize == 0) throw Error(ErrorKind::Validation, "maxTermSize must be positive");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace cn
