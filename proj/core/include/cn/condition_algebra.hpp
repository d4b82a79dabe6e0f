#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cn/condition.hpp"
#include "cn/config.hpp"

namespace cn {

/// Which equational theory a canonical form is taken in.
enum class Theory {
  Full,       // every law of the condition algebra
  Symmetric,  // no annihilation, no merging A^0 A^1 -> A
};

/// Canonical representative of a condition's equivalence class.
struct CanonicalCondition {
  std::string key;      // serialization, equal iff the classes are equal
  Condition rep;        // least member by size, nesting, word length, then key
  int size = 0;         // size of rep
  bool complete = true; // false if the class closure hit its cap

  bool is_neutral() const { return size == 0; }
  friend bool operator==(const CanonicalCondition& a, const CanonicalCondition& b) {
    return a.key == b.key;
  }
};

struct TraceStep {
  Condition term;
  std::string law;  // justification for reaching term from the previous step
};

struct UnsafeTrace {
  std::vector<TraceStep> annihilation;  // A A^- = ... = I
  std::vector<TraceStep> contradiction; // A^0 = ... = A^1
  bool verified = false;                // every step re-checked by law application
};

/// Decides equality of conditions.
///
/// A condition is flattened into a multiset of elements: a leaf with an
/// exponent word, or a bracket around a nested multiset with an exponent
/// word. Products, I, "--" cancellation and the distribution of -, 0, 1
/// over products are absorbed by that representation. The remaining laws
/// (copy merge and split at any letter of a word, annihilation, bracket
/// merge and split under the size limit) act as moves; the class of a
/// condition is the finite set of states reachable within the limit, and
/// the canonical form is its least member.
class ConditionAlgebra {
 public:
  explicit ConditionAlgebra(EngineConfig cfg);

  const EngineConfig& config() const { return cfg_; }

  /// Throws IllFormed / SizeLimitExceeded / ExponentClash.
  void check_well_formed(const Condition& c) const;

  CanonicalCondition canonicalize(const Condition& c, Theory theory = Theory::Full) const;

  /// Canonical class of a constructor condition: additionally identifies A
  /// with <A> whenever A has a size-1 member.
  CanonicalCondition constructor_key(const Condition& c, Theory theory = Theory::Full) const;

  bool cond_equal(const Condition& a, const Condition& b) const;
  /// a reduces to b in the restricted theory: symmetric laws both ways,
  /// A -> A^0 A^1 only forwards, no annihilation.
  bool cond_equal_direct(const Condition& a, const Condition& b) const;
  bool is_neutral(const Condition& c) const;

  /// Partial product: throws SizeLimitExceeded or ExponentClash.
  Condition cond_product(const Condition& a, const Condition& b) const;

  /// Members of the class of c with size 1 (constructor-condition
  /// candidates), as terms.
  std::vector<Condition> size_one_members(const Condition& c, Theory theory) const;

  /// Terms leading from c to its canonical representative, one engine move
  /// apart; empty when the representative lies outside the closure of c.
  std::vector<Condition> derivation(const Condition& c, Theory theory = Theory::Full) const;

  /// Derivation of A^0 = A^1 without the exponent checks; refused outside unsafe mode.
  UnsafeTrace unsafe_closure_demo(const Condition& a) const;

  struct State;  // opaque element-multiset representation

 private:
  struct ClassInfo;
  std::shared_ptr<const ClassInfo> class_of(const Condition& c, Theory theory) const;
  std::shared_ptr<const ClassInfo> class_of_state(const State& s, Theory theory) const;

  EngineConfig cfg_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const ClassInfo>> classes_[2];
};

}  // namespace cn
