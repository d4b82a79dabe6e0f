#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cn/condition.hpp"
#include "cn/number.hpp"

namespace cn {

class ConditionAlgebra;

/// A position is a word over 1-based child indices; the empty word is the root.
using Position = std::vector<int>;

/// A word over {0, 1}, listed in the order the letters are met when walking
/// from a position up to the root.
using ExponentWord = std::string;

using AnyTerm = std::variant<Condition, NumberTerm>;

std::string to_string(const Position& p);

/// v <= w iff v is a prefix of w.
bool exponent_leq(const ExponentWord& v, const ExponentWord& w);
bool exponents_comparable(const ExponentWord& v, const ExponentWord& w);

AnyTerm subterm_at(const AnyTerm& t, const Position& p);
ExponentWord copy_exponent(const AnyTerm& t, const Position& p);

/// Wraps t/p in copy operators spelling t^p (innermost letter first).
AnyTerm exponentiated_subterm(const AnyTerm& t, const Position& p);

/// Positions of every subterm, in preorder.
std::vector<Position> all_positions(const AnyTerm& t);

/// Unique copy exponents: equal leaves (atoms, condition variables, number
/// variables) at distinct positions carry prefix-incomparable exponents.
bool has_unique_exponents(const AnyTerm& t);

/// Positions of the conditions that sit directly under a constructor.
std::vector<Position> constructor_condition_positions(const NumberTerm& a);

/// Unique exponents, every constructor condition of size 1 and not equal to
/// I, every condition limited.
bool is_well_formed_number(const NumberTerm& a, const ConditionAlgebra& alg);

// ---- types ---------------------------------------------------------------

struct CnType {
  enum class Kind { Num, Arrow };
  Kind kind = Kind::Num;
  int width = 1;     // n of iota^n (Num) or the domain width (Arrow)
  int codomain = 1;  // m (Arrow only)

  static CnType num(int n = 1) { return {Kind::Num, n, 1}; }
  static CnType arrow(int n, int m) { return {Kind::Arrow, n, m}; }
  friend bool operator==(const CnType&, const CnType&) = default;
};

std::string to_string(const CnType& t);

using TypeEnv = std::map<std::string, CnType>;

/// Throws Error(IllTyped) when no formation rule applies.
CnType typecheck(const NumberTerm& a, const TypeEnv& env);

/// Plain value(s): one entry for iota, n entries for a tuple. Conditions and
/// ann constructors are erased; copies, condition applications and
/// projections of tuples are evaluated structurally.
std::vector<std::uint64_t> extension(const NumberTerm& a);

}  // namespace cn
