#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cn/config.hpp"
#include "cn/number.hpp"
#include "cn/term_model.hpp"

namespace cn {

struct FunDecl {
  std::string name;
  int arity = 1;
  int codomain = 1;
};

struct Rule {
  std::string fun;
  std::string label;  // "[a1]" in the source, or fun#k
  std::vector<NumberTerm> lhs;
  NumberTerm rhs;
  bool optional = false;  // only active with EngineConfig::s6
  int line = 0;
};

struct Program {
  std::map<std::string, FunDecl> funs;
  std::vector<Rule> rules;

  /// Rules of f that are active under cfg.
  std::vector<const Rule*> rules_of(const std::string& f, const EngineConfig& cfg) const;
  const FunDecl& decl(const std::string& f) const;  // throws UndeclaredFunction
  TypeEnv type_env() const;
  /// Adds the declarations and rules of other; a function declared in both
  /// must agree on its type.
  void merge(const Program& other);
};

struct ValidationIssue {
  std::string rule;      // label
  std::string position;  // "lhs 2", "rhs 1.2", ...
  std::string message;
  bool warning = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::string to_string() const;
};

/// Grammar:
///   program := (decl | rule)*
///   decl    := "fun" name ":" INT "->" INT
///   rule    := ["optional"] "rule" ["[" label "]"] name "(" pats ")" "=>" number
/// "@i" on a right side is the atom named <name><i>; "#" starts a comment.
Program parse_program_raw(std::string_view src);

/// parse_program_raw followed by validate_program; throws Error(Validation)
/// listing every violation.
Program parse_program(std::string_view src);

ValidationReport validate_program(const Program& p);

}  // namespace cn
