#pragma once

#include <random>
#include <string>
#include <vector>

#include "cn/condition.hpp"

namespace cn {

/// X^e or a^e with e a word over {0, 1, -}. Brackets are carried as opaque
/// bases spelled "[...]".
struct ElementaryCondition {
  std::string base;
  std::string exponent;

  std::string to_string() const;
  friend auto operator<=>(const ElementaryCondition&, const ElementaryCondition&) = default;
};

/// Finite set of elementary conditions, kept sorted.
struct SetCondition {
  std::vector<ElementaryCondition> elems;

  static SetCondition of(std::vector<ElementaryCondition> elems);
  bool empty() const { return elems.empty(); }
  std::string to_string() const;
  friend bool operator==(const SetCondition&, const SetCondition&) = default;
};

/// Deletes every "--" pair.
std::string cancel_double_inverse(const std::string& word);

/// Unique copy exponents on the 0/1 projection of the exponent words.
bool has_unique_exponents(const SetCondition& s);

/// The set-condition interpretation: leaves become singletons, products are
/// normalized unions, I is empty, and -, 0, 1 act on every element.
SetCondition to_set_condition(const Condition& c);

/// Rule (1) to fixpoint, then rules (2)-(4) to fixpoint, always taking the
/// first applicable pair in sorted order.
SetCondition normal_form(const SetCondition& s);

/// Same reduction, but every choice (rule-1 element order, which applicable
/// pair to reduce next) is drawn from rng.
SetCondition normal_form_randomized(const SetCondition& s, std::mt19937_64& rng);

}  // namespace cn
