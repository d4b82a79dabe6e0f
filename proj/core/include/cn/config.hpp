#pragma once

#include <cstddef>

namespace cn {

/// Engine-wide settings. One instance is shared by every component of an
/// engine; nothing here is global.
struct EngineConfig {
  int limit = 3;               // maximal size of every condition subterm, >= 3
  bool s6 = false;             // include the truncating subtraction rule
  bool bracketExt = false;     // <A>^- = <A^->, <A>^0 = <A^0>, <A>^1 = <A^1>
  std::size_t maxStates = 100000;
  std::size_t maxTermSize = 64;  // constructors per search state
  bool unsafeMode = false;     // disable unique-exponent checks

  void validate() const;
};

/// Three-valued verdict used by every bounded decision procedure.
enum class Verdict { True, False, Unknown };

const char* to_string(Verdict v);

}  // namespace cn
