#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cn/condition.hpp"

namespace cn {

enum class NumKind { Var, Zero, Suc, Ann, Tuple, Proj, CondApp, Copy0, Copy1, FunApp };

/// Immutable constructed-number term.
///
/// Children are numbered the way positions address them: a constructor's
/// conditions come first, then its number argument. Zero(A) has one child,
/// Suc(A, a) two, Ann(A, B, a) three, CondApp(A, a) two; tuples and function
/// applications list their arguments; Proj and the copies have one child.
class NumberTerm {
 public:
  NumberTerm();  // the variable "x"; mostly a placeholder for containers

  static NumberTerm var(std::string name);
  static NumberTerm zero(Condition c);
  static NumberTerm suc(Condition c, NumberTerm arg);
  static NumberTerm ann(Condition pos, Condition neg, NumberTerm arg);
  static NumberTerm tuple(std::vector<NumberTerm> items);
  static NumberTerm proj(int index, NumberTerm arg);
  static NumberTerm cond_app(Condition c, NumberTerm arg);
  static NumberTerm copy0(NumberTerm arg);
  static NumberTerm copy1(NumberTerm arg);
  static NumberTerm copy(NumberTerm arg, int bit);
  static NumberTerm fun_app(std::string fun, std::vector<NumberTerm> args);

  NumKind kind() const;
  const std::string& name() const;  // variable or function name
  int index() const;                // projection index (1-based)

  const std::vector<Condition>& conds() const;
  const std::vector<NumberTerm>& args() const;
  /// Number argument of a unary term (Suc, Ann, Proj, CondApp, copies).
  const NumberTerm& arg() const;
  const Condition& cond(std::size_t i = 0) const { return conds().at(i); }

  /// Same head (kind, name, index) over new children.
  NumberTerm with_children(std::vector<Condition> conds, std::vector<NumberTerm> args) const;

  bool is_constructor() const {
    auto k = kind();
    return k == NumKind::Zero || k == NumKind::Suc || k == NumKind::Ann;
  }

  friend bool operator==(const NumberTerm& a, const NumberTerm& b);
  friend bool operator!=(const NumberTerm& a, const NumberTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit NumberTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Number of Zero/Suc/Ann constructors in the term.
std::size_t constructor_count(const NumberTerm& a);

}  // namespace cn
