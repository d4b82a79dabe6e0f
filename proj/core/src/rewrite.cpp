#include "cn/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_set>

#include "cn/error.hpp"
#include "cn/syntax.hpp"

namespace cn {

namespace {

using N = NumberTerm;
using C = Condition;

std::atomic<std::size_t> g_violations{0};
std::mutex g_violation_mu;
std::string g_first_violation;

void record_violation(const std::string& what) {
  if (g_violations.fetch_add(1) == 0) {
    std::lock_guard<std::mutex> lock(g_violation_mu);
    g_first_violation = what;
  }
}

// Every term obtained by replacing one application subterm of t by one of
// fn(subterm).
std::vector<N> at_applications(const N& t, const std::function<std::vector<N>(const N&)>& fn) {
  std::vector<N> out;
  if (t.kind() == NumKind::FunApp) out = fn(t);
  for (std::size_t i = 0; i < t.args().size(); ++i)
    for (auto& r : at_applications(t.args()[i], fn)) {
      auto args = t.args();
      args[i] = std::move(r);
      out.push_back(t.with_children(t.conds(), std::move(args)));
    }
  return out;
}

bool match_cond_syntactic(const C& pat, const C& c, Substitution& s) {
  if (pat.kind() == CondKind::Var) {
    if (size(c) != 1) return false;
    s.conds[pat.name()] = c;
    return true;
  }
  if (pat.kind() != CondKind::Bracket || c.kind() != CondKind::Bracket) return false;
  auto ps = factors(pat.inner());
  auto cs = factors(c.inner());
  if (ps.size() != cs.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!match_cond_syntactic(ps[i], cs[i], s)) return false;
  return true;
}

bool match_syntactic(const N& pat, const N& t, Substitution& s) {
  if (pat.kind() == NumKind::Var) {
    s.nums[pat.name()] = t;
    return true;
  }
  if (pat.kind() != t.kind() || !pat.is_constructor()) return false;
  for (std::size_t i = 0; i < pat.conds().size(); ++i)
    if (!match_cond_syntactic(pat.cond(i), t.cond(i), s)) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i)
    if (!match_syntactic(pat.args()[i], t.args()[i], s)) return false;
  return true;
}

std::vector<Substitution> combine(const std::vector<Substitution>& a, const std::vector<Substitution>& b) {
  std::vector<Substitution> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Substitution s = x;
      s.nums.insert(y.nums.begin(), y.nums.end());
      s.conds.insert(y.conds.begin(), y.conds.end());
      out.push_back(std::move(s));
    }
  return out;
}

bool is_result(const N& t) {
  if (t.kind() == NumKind::Tuple)
    return std::all_of(t.args().begin(), t.args().end(), [](const N& x) { return is_constructor_number(x); });
  return is_constructor_number(t);
}

}  // namespace

std::size_t wellformedness_violations() { return g_violations.load(); }

std::string first_wellformedness_violation() {
  std::lock_guard<std::mutex> lock(g_violation_mu);
  return g_first_violation;
}

std::string Substitution::to_string() const {
  std::string r = "{";
  bool first = true;
  for (const auto& [k, v] : conds) {
    r += (first ? "" : ", ") + k + " := " + render(v);
    first = false;
  }
  for (const auto& [k, v] : nums) {
    r += (first ? "" : ", ") + k + " := " + render(v);
    first = false;
  }
  return r + "}";
}

Condition substitute(const Condition& c, const Substitution& s) {
  switch (c.kind()) {
    case CondKind::Var: {
      auto it = s.conds.find(c.name());
      return it == s.conds.end() ? c : it->second;
    }
    case CondKind::Atom:
    case CondKind::Neutral: return c;
    case CondKind::Product: return C::product(substitute(c.left(), s), substitute(c.right(), s));
    case CondKind::Inverse: return C::inverse(substitute(c.inner(), s));
    case CondKind::Copy0: return C::copy0(substitute(c.inner(), s));
    case CondKind::Copy1: return C::copy1(substitute(c.inner(), s));
    case CondKind::Bracket: return C::bracket(substitute(c.inner(), s));
  }
  return c;
}

NumberTerm substitute(const NumberTerm& a, const Substitution& s) {
  if (a.kind() == NumKind::Var) {
    auto it = s.nums.find(a.name());
    return it == s.nums.end() ? a : it->second;
  }
  std::vector<C> conds;
  for (const auto& c : a.conds()) conds.push_back(substitute(c, s));
  std::vector<N> args;
  for (const auto& x : a.args()) args.push_back(substitute(x, s));
  return a.with_children(std::move(conds), std::move(args));
}

std::vector<Substitution> match_rule(const Rule& r, const std::vector<NumberTerm>& args) {
  if (r.lhs.size() != args.size()) return {};
  Substitution s;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!match_syntactic(r.lhs[i], args[i], s)) return {};
  return {s};
}

bool ReachResult::contains(const std::string& key) const {
  return std::any_of(classes.begin(), classes.end(), [&](const ReachClass& c) { return c.key == key; });
}

std::vector<std::string> ReachResult::keys() const {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.key);
  return out;
}

std::vector<NumberTerm> RewriteEngine::rule_step_neighbors(const NumberTerm& a) const {
  const ConditionAlgebra& alg = eq_.algebra();
  std::vector<N> out;
  std::set<std::string> seen;
  auto steps = at_applications(a, [&](const N& app) {
    std::vector<N> res;
    if (!prog_.funs.count(app.name())) return res;
    for (const Rule* r : prog_.rules_of(app.name(), config()))
      for (const auto& s : match_rule(*r, app.args())) res.push_back(substitute(r->rhs, s));
    return res;
  });
  for (auto& t : steps)
    if (is_well_formed_number(t, alg) && seen.insert(render(t)).second) out.push_back(std::move(t));
  return out;
}

std::vector<Substitution> RewriteEngine::cond_variants(const Condition& pat, const Condition& c, Mode mode) const {
  const Theory th = mode == Mode::Full ? Theory::Full : Theory::Symmetric;
  std::vector<Substitution> out;
  if (pat.kind() == CondKind::Var) {
    Substitution s;
    s.conds[pat.name()] = c;
    out.push_back(std::move(s));
    return out;
  }
  auto ps = factors(pat.inner());
  std::vector<C> members = eq_.algebra().size_one_members(c, th);
  members.push_back(c);
  std::set<std::string> seen;
  for (const auto& m : members) {
    if (m.kind() != CondKind::Bracket) continue;
    auto fs = factors(m.inner());
    if (fs.size() != ps.size()) continue;
    std::vector<std::size_t> perm(fs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      Substitution s;
      std::string key;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        s.conds[ps[i].name()] = fs[perm[i]];
        key += render(fs[perm[i]]) + ";";
      }
      if (seen.insert(key).second) out.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<Substitution> RewriteEngine::match_variants(const NumberTerm& pat, const NumberTerm& term, Mode mode) const {
  switch (pat.kind()) {
    case NumKind::Var: {
      Substitution s;
      s.nums[pat.name()] = term;
      return {s};
    }
    case NumKind::Zero:
      if (term.kind() != NumKind::Zero) return {};
      return cond_variants(pat.cond(0), term.cond(0), mode);
    case NumKind::Suc:
    case NumKind::Ann: {
      if (term.kind() != NumKind::Suc && term.kind() != NumKind::Ann) return {};
      Chain c = eq_.chain_of(term, mode);
      std::vector<Substitution> out;
      std::set<std::string> used;
      if (pat.kind() == NumKind::Suc) {
        if (c.suc_count() < 1) return {};
        for (std::size_t i = 0; i < c.positive.size(); ++i) {
          if (!used.insert(c.positive[i].key).second) continue;
          Chain rest = c;
          rest.positive.erase(rest.positive.begin() + static_cast<std::ptrdiff_t>(i));
          N rest_term = eq_.build_chain(rest, mode);
          auto sub = combine(cond_variants(pat.cond(0), c.positive[i].rep, mode), match_variants(pat.arg(), rest_term, mode));
          out.insert(out.end(), sub.begin(), sub.end());
        }
      } else {
        for (std::size_t i = 0; i < c.positive.size(); ++i)
          for (std::size_t j = 0; j < c.negative.size(); ++j) {
            if (!used.insert(c.positive[i].key + "|" + c.negative[j].key).second) continue;
            Chain rest = c;
            rest.positive.erase(rest.positive.begin() + static_cast<std::ptrdiff_t>(i));
            rest.negative.erase(rest.negative.begin() + static_cast<std::ptrdiff_t>(j));
            N rest_term = eq_.build_chain(rest, mode);
            auto conds = combine(cond_variants(pat.cond(0), c.positive[i].rep, mode),
                                 cond_variants(pat.cond(1), c.negative[j].rep, mode));
            auto sub = combine(conds, match_variants(pat.arg(), rest_term, mode));
            out.insert(out.end(), sub.begin(), sub.end());
          }
      }
      return out;
    }
    default: return {};
  }
}

std::vector<NumberTerm> RewriteEngine::search_steps(const NumberTerm& normalized, Mode mode) const {
  const ConditionAlgebra& alg = eq_.algebra();
  auto raw = at_applications(normalized, [&](const N& app) {
    std::vector<N> res;
    if (!prog_.funs.count(app.name())) return res;
    for (const Rule* r : prog_.rules_of(app.name(), config())) {
      if (r->lhs.size() != app.args().size()) continue;
      std::vector<Substitution> subs{Substitution{}};
      for (std::size_t i = 0; i < r->lhs.size() && !subs.empty(); ++i)
        subs = combine(subs, match_variants(r->lhs[i], app.args()[i], mode));
      for (const auto& s : subs) res.push_back(substitute(r->rhs, s));
    }
    return res;
  });
  std::vector<N> out;
  std::set<std::string> seen;
  for (const auto& t : raw) {
    if (!is_well_formed_number(t, alg)) {
      record_violation(render(normalized) + "  ->  " + render(t));
      continue;
    }
    N n = eq_.normalize(t, mode);
    if (!is_well_formed_number(n, alg)) {
      record_violation(render(t) + "  normalizes to  " + render(n));
      continue;
    }
    if (seen.insert(render(n)).second) out.push_back(std::move(n));
  }
  return out;
}

ReachResult RewriteEngine::search(const NumberTerm& a, Mode mode, const std::string* target, bool* found) const {
  const ConditionAlgebra& alg = eq_.algebra();
  const EngineConfig& cfg = config();
  if (!is_well_formed_number(a, alg)) throw Error(ErrorKind::IllFormed, render(a));
  ReachResult res;
  if (found) *found = false;
  N start = eq_.normalize(a, mode);
  std::unordered_set<std::string> visited{render(start)};
  std::deque<N> queue{start};
  std::set<std::string> class_keys;
  while (!queue.empty()) {
    N t = std::move(queue.front());
    queue.pop_front();
    ++res.states;
    if (target || is_result(t)) {
      std::string full = mode == Mode::Full ? render(t) : eq_.key(t, Mode::Full);
      if (target && full == *target) {
        *found = true;
        return res;
      }
      if (is_result(t) && class_keys.insert(full).second) res.classes.push_back({full, t});
    }
    for (auto& n : search_steps(t, mode)) {
      ++res.steps;
      std::string k = render(n);
      if (visited.count(k)) continue;
      if (constructor_count(n) > cfg.maxTermSize || visited.size() >= cfg.maxStates) {
        res.complete = false;
        continue;
      }
      visited.insert(std::move(k));
      queue.push_back(std::move(n));
    }
  }
  std::sort(res.classes.begin(), res.classes.end(), [](const ReachClass& x, const ReachClass& y) { return x.key < y.key; });
  return res;
}

Verdict RewriteEngine::reaches(const NumberTerm& a, const NumberTerm& b, Mode mode) const {
  if (!is_well_formed_number(b, eq_.algebra())) throw Error(ErrorKind::IllFormed, render(b));
  std::string target = eq_.key(b, Mode::Full);
  bool found = false;
  ReachResult r = search(a, mode, &target, &found);
  if (found) return Verdict::True;
  return r.complete ? Verdict::False : Verdict::Unknown;
}

Verdict RewriteEngine::numbers_equal(const NumberTerm& a, const NumberTerm& b, std::string* warning) const {
  if (warning)
    *warning = "a = b is read as mutual reduction; it is an equality only for programs whose reversal is consistent";
  if (reaches(a, b) == Verdict::True && reaches(b, a) == Verdict::True) return Verdict::True;
  return Verdict::Unknown;
}

}  // namespace cn
