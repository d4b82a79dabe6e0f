#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cn/condition.hpp"
#include "cn/config.hpp"

// Single-step application of the condition-algebra laws on concrete terms.
// Slow but direct; used to cross-check the canonicalizer and to re-verify
// derivations.
namespace cn::laws {

struct LawOptions {
  bool split = true;    // A -> A^0 A^1
  bool invent = false;  // insert B^0 B^1- for subterms B; A -> A^--; <A> -> <<A>>; <A B> -> <A <B>>
};

/// Terms modulo AC and the unit laws: products flattened, I factors,
/// I^x and <I> removed, factors sorted by rendering.
Condition ac_normal(const Condition& c);

/// Every term one law application away from c (c taken modulo AC), with the
/// name of the law. Results are AC-normal, limited and, outside unsafe mode,
/// have unique exponents.
std::vector<std::pair<Condition, std::string>> neighbors(const Condition& c, const EngineConfig& cfg,
                                                         const LawOptions& opts = {});

/// Bidirectional search for a common descendant of a and b, at most
/// maxDepth steps from each side (negative: unbounded) and maxNodes visited
/// terms in total.
bool reachable(const Condition& a, const Condition& b, const EngineConfig& cfg, std::size_t maxNodes,
               int maxDepth, const LawOptions& opts = {true, true});

}  // namespace cn::laws
