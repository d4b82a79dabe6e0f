#pragma once

#include <random>
#include <string>
#include <vector>

#include "cn/condition.hpp"
#include "cn/number.hpp"
#include "cn/syntax.hpp"
#include "cn/term_model.hpp"

namespace cn::test {

inline Condition cond(std::string_view s) { return parse_condition_raw(s); }
inline NumberTerm num(std::string_view s) { return parse_number_raw(s); }

/// Random condition over the variables X, Y and the atoms a, b.
inline Condition random_condition(std::mt19937_64& rng, int depth) {
  int k = std::uniform_int_distribution<int>(0, depth <= 0 ? 2 : 8)(rng);
  switch (k) {
    case 0: return Condition::var(rng() % 2 ? "X" : "Y");
    case 1: return Condition::atom(rng() % 2 ? "a" : "b");
    case 2: return rng() % 4 ? Condition::var("X") : Condition::neutral();
    case 3:
    case 4: return Condition::product(random_condition(rng, depth - 1), random_condition(rng, depth - 1));
    case 5: return Condition::inverse(random_condition(rng, depth - 1));
    case 6: return Condition::copy0(random_condition(rng, depth - 1));
    case 7: return Condition::copy1(random_condition(rng, depth - 1));
    default: return Condition::bracket(random_condition(rng, depth - 1));
  }
}

/// Replaces the variables X and Y by the given conditions.
inline Condition instantiate(const Condition& c, const Condition& x, const Condition& y) {
  switch (c.kind()) {
    case CondKind::Var: return c.name() == "X" ? x : c.name() == "Y" ? y : c;
    case CondKind::Atom:
    case CondKind::Neutral: return c;
    case CondKind::Product: return Condition::product(instantiate(c.left(), x, y), instantiate(c.right(), x, y));
    case CondKind::Inverse: return Condition::inverse(instantiate(c.inner(), x, y));
    case CondKind::Copy0: return Condition::copy0(instantiate(c.inner(), x, y));
    case CondKind::Copy1: return Condition::copy1(instantiate(c.inner(), x, y));
    case CondKind::Bracket: return Condition::bracket(instantiate(c.inner(), x, y));
  }
  return c;
}

/// First position (preorder) whose subterm satisfies pred.
template <class Pred>
Position find_position(const AnyTerm& t, Pred pred) {
  for (const auto& p : all_positions(t))
    if (pred(subterm_at(t, p))) return p;
  return {};
}

inline bool is_cond_leaf(const AnyTerm& t, const std::string& name) {
  auto c = std::get_if<Condition>(&t);
  return c && c->is_leaf() && c->name() == name;
}

inline bool is_num_var(const AnyTerm& t, const std::string& name) {
  auto a = std::get_if<NumberTerm>(&t);
  return a && a->kind() == NumKind::Var && a->name() == name;
}

}  // namespace cn::test
