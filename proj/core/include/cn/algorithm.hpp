#pragma once

#include <string>
#include <vector>

#include "cn/program.hpp"
#include "cn/rewrite.hpp"

namespace cn {

enum class Shape { Suc, Ann };
/// shape[i-1] is the i-th constructor counted upward from the zero.
using ShapeWord = std::vector<Shape>;

/// Ground number for a variable: atoms x0 on the zero, xi on a suc at index
/// i, xi+ and xi- on an ann.
NumberTerm make_ground(const std::string& var, const ShapeWord& shape);

/// All words of length <= maxConstructors, shorter first, suc before ann.
std::vector<ShapeWord> shapes(int maxConstructors, bool includeAnn);

/// Cartesian product of ground numbers, first variable varying slowest.
std::vector<std::vector<NumberTerm>> enumerate_ground(const std::vector<std::string>& vars, int maxConstructors,
                                                      bool includeAnn);

/// Argument variable names for an n-ary function: x, y, z, u, v, w, x7, ...
std::vector<std::string> argument_names(int n);

struct AlgoEntry {
  std::vector<NumberTerm> input;
  std::vector<std::string> classes;  // sorted class keys
  bool complete = true;
};

/// A CN-algorithm restricted to a finite sample of ground inputs.
struct AlgoMap {
  std::vector<AlgoEntry> entries;
};

AlgoMap algo_of(const RewriteEngine& eng, const std::string& f, const std::vector<std::vector<NumberTerm>>& inputs);

/// Pointwise inclusion m1 <= m2. False needs a class of m1 missing from a
/// complete entry of m2; otherwise any incomplete entry gives Unknown.
/// Throws DomainMismatch when the sampled inputs differ.
Verdict algo_refines(const AlgoMap& m1, const AlgoMap& m2);

/// Mutual refinement of f and g on the sample. Throws ArityMismatch.
Verdict algo_equal(const RewriteEngine& eng, const std::string& f, const std::string& g,
                   const std::vector<std::vector<NumberTerm>>& inputs);

/// Every class reachable from f(a) is also reached by direct reduction.
Verdict is_direct(const RewriteEngine& eng, const std::string& f, const std::vector<std::vector<NumberTerm>>& inputs);

/// Addition (rules a1-a5) and subtraction (s1-s5, plus the optional s6).
Program builtin_programs();
const char* builtin_source();

}  // namespace cn
