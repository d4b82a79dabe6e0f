#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cn/condition_algebra.hpp"
#include "cn/config.hpp"
#include "cn/number.hpp"

namespace cn {

/// Which equality a computation is taken under: smooth equality, or its
/// direct restriction (no annihilation, no inversion-simplification, the
/// asymmetric laws left to right only).
enum class Mode { Full, Direct };

/// Pushes number-level copies into constructors and tuples as far as they
/// go; copies above variables, applications and projections stay.
NumberTerm copy_push(const NumberTerm& a);

/// Canonical description of a constructor number's class. The suc/ann
/// exchange laws make the order of constructors and the pairing of ann
/// conditions irrelevant, so a chain is a multiset of positive slots (suc
/// conditions, first ann conditions) and one of negative slots.
struct ConstructorClassKey {
  std::string tail;                   // canonical zero condition
  std::vector<std::string> positive;  // sorted
  std::vector<std::string> negative;  // sorted
  int suc_count = 0;
  int ann_count = 0;

  std::string serialize() const;
  friend bool operator==(const ConstructorClassKey&, const ConstructorClassKey&) = default;
};

/// A normalized suc/ann chain above a tail that is not suc or ann.
struct Chain {
  std::vector<CanonicalCondition> positive;
  std::vector<CanonicalCondition> negative;
  NumberTerm tail;

  int suc_count() const { return static_cast<int>(positive.size() - negative.size()); }
};

class Equivalence {
 public:
  explicit Equivalence(const ConditionAlgebra& alg) : alg_(alg) {}

  const ConditionAlgebra& algebra() const { return alg_; }

  /// Normal form under the oriented laws: copies pushed, projections of
  /// tuples selected, copy-expansion applied, conditions replaced by
  /// canonical representatives, chains sorted, and (Full only) inverse
  /// ann pairs removed. Terms with equal normal forms are smoothly equal.
  NumberTerm normalize(const NumberTerm& a, Mode mode = Mode::Full) const;
  std::string key(const NumberTerm& a, Mode mode = Mode::Full) const;

  /// Throws NotConstructorNumber unless a is built from zero/suc/ann only.
  ConstructorClassKey constructor_canonical(const NumberTerm& a) const;

  /// One application of a single law anywhere in a, filtered to
  /// well-formed results.
  std::vector<NumberTerm> smooth_neighbors(const NumberTerm& a, Mode mode = Mode::Full) const;

  /// Bidirectional search over normalized neighbors; Unknown when the
  /// budget runs out before either side is exhausted.
  Verdict smooth_equal(const NumberTerm& a, const NumberTerm& b, std::size_t budget = 10000) const;

  /// Chain view of a normalized term.
  Chain chain_of(const NumberTerm& normalized, Mode mode) const;
  /// Rebuilds the canonical chain (sorted, inversion-simplified in Full).
  NumberTerm build_chain(Chain c, Mode mode) const;

 private:
  NumberTerm norm(const NumberTerm& a, Mode mode) const;
  Theory theory(Mode m) const { return m == Mode::Full ? Theory::Full : Theory::Symmetric; }

  const ConditionAlgebra& alg_;
};

/// True iff a is built from zero, suc and ann only.
bool is_constructor_number(const NumberTerm& a);

}  // namespace cn
