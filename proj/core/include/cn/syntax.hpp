#pragma once

#include <string>
#include <string_view>

#include "cn/condition.hpp"
#include "cn/number.hpp"

namespace cn {

class ConditionAlgebra;

// Concrete syntax.
//
//   conditions  I | X (uppercase identifier: variable) | x0, x2+, f3
//               (lowercase identifier, optional +/- suffix: atom)
//               | A B (product) | A^- | A^0 | A^1 | A^01- (letter runs)
//               | [A] (bracket) | (A)
//   numbers     zero{A} | suc{A}(a) | ann{A,B}(a) | (a1, ..., an)
//               | i ! a | A -> a | a^0 | a^1 | f(a1, ..., an) | x
//
// In rule right-hand sides "@i" is the atom named <function><i>.

std::string render(const Condition& c);
std::string render(const NumberTerm& a);

struct ParseOptions {
  std::string atomFunction;  // expands "@i"; empty disables it
};

/// Syntax only; no well-formedness checks.
Condition parse_condition_raw(std::string_view src, const ParseOptions& opts = {});
NumberTerm parse_number_raw(std::string_view src, const ParseOptions& opts = {});

/// Parse and validate (limit and unique exponents; for numbers full
/// well-formedness). Throws cn::Error.
Condition parse_condition(std::string_view src, const ConditionAlgebra& alg);
NumberTerm parse_number(std::string_view src, const ConditionAlgebra& alg);

namespace detail {

/// Cursor shared with the program-file parser.
class Scanner {
 public:
  explicit Scanner(std::string_view src, ParseOptions opts = {}) : src_(src), opts_(std::move(opts)) {}

  Condition condition();
  NumberTerm number();

  void skip_ws();
  bool at_end();
  bool peek(std::string_view tok);
  bool accept(std::string_view tok);
  void expect(std::string_view tok);
  std::string identifier();
  long integer();
  [[noreturn]] void fail(const std::string& msg) const;
  std::size_t pos() const { return pos_; }
  void set_options(ParseOptions o) { opts_ = std::move(o); }

 private:
  bool factor_start();
  Condition factor();
  Condition cond_primary();
  NumberTerm postfix_number();
  NumberTerm atom_number();

  std::string_view src_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

}  // namespace cn
