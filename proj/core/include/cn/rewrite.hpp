#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cn/equivalence.hpp"
#include "cn/program.hpp"

namespace cn {

struct Substitution {
  std::map<std::string, NumberTerm> nums;
  std::map<std::string, Condition> conds;

  std::string to_string() const;
};

Condition substitute(const Condition& c, const Substitution& s);
NumberTerm substitute(const NumberTerm& a, const Substitution& s);

/// Syntactic matching: every σ with σ(lhs) == args and size(σ(X)) == 1.
std::vector<Substitution> match_rule(const Rule& r, const std::vector<NumberTerm>& args);

struct ReachClass {
  std::string key;  // smooth-equality class (Full normal form)
  NumberTerm rep;   // the constructor number as reached
};

struct ReachResult {
  std::vector<ReachClass> classes;  // sorted by key
  bool complete = true;
  std::size_t states = 0;
  std::size_t steps = 0;

  bool contains(const std::string& key) const;
  std::vector<std::string> keys() const;
};

class RewriteEngine {
 public:
  RewriteEngine(const Program& p, const Equivalence& eq) : prog_(p), eq_(eq) {}

  const Program& program() const { return prog_; }
  const Equivalence& equivalence() const { return eq_; }
  const EngineConfig& config() const { return eq_.algebra().config(); }

  /// One rule application at one application subterm, matched syntactically.
  std::vector<NumberTerm> rule_step_neighbors(const NumberTerm& a) const;

  /// Rule steps from a normalized state, matching modulo the exchange laws
  /// and the constructor bracket law; results are normalized under mode.
  std::vector<NumberTerm> search_steps(const NumberTerm& normalized, Mode mode) const;

  ReachResult reach_normal_forms(const NumberTerm& a) const { return search(a, Mode::Full, nullptr, nullptr); }
  ReachResult direct_reach(const NumberTerm& a) const { return search(a, Mode::Direct, nullptr, nullptr); }

  /// Whether a reduces to a term smoothly equal to b.
  Verdict reaches(const NumberTerm& a, const NumberTerm& b, Mode mode = Mode::Full) const;

  /// a = b iff each reduces to the other. Only True or Unknown; the warning
  /// notes that this equality presupposes a consistent program.
  Verdict numbers_equal(const NumberTerm& a, const NumberTerm& b, std::string* warning = nullptr) const;

 private:
  ReachResult search(const NumberTerm& a, Mode mode, const std::string* target, bool* found) const;
  std::vector<Substitution> match_variants(const NumberTerm& pat, const NumberTerm& term, Mode mode) const;
  std::vector<Substitution> cond_variants(const Condition& pat, const Condition& c, Mode mode) const;

  const Program& prog_;
  const Equivalence& eq_;
};

/// Search states that failed the well-formedness check after a step. The
/// counter is process-wide and only ever increases.
std::size_t wellformedness_violations();
std::string first_wellformedness_violation();

}  // namespace cn
