#include "cn/term_model.hpp"

#include <algorithm>
#include <map>

#include "cn/condition_algebra.hpp"
#include "cn/error.hpp"
#include "cn/syntax.hpp"

namespace cn {

std::string to_string(const Position& p) {
  if (p.empty()) return "e";
  std::string r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) r += '.';
    r += std::to_string(p[i]);
  }
  return r;
}

bool exponent_leq(const ExponentWord& v, const ExponentWord& w) {
  return v.size() <= w.size() && std::equal(v.begin(), v.end(), w.begin());
}

bool exponents_comparable(const ExponentWord& v, const ExponentWord& w) {
  return exponent_leq(v, w) || exponent_leq(w, v);
}

namespace {

std::size_t child_count(const AnyTerm& t) {
  if (auto c = std::get_if<Condition>(&t)) return c->child_count();
  const auto& a = std::get<NumberTerm>(t);
  return a.conds().size() + a.args().size();
}

AnyTerm child(const AnyTerm& t, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > child_count(t))
    throw Error(ErrorKind::InvalidPosition, "child index " + std::to_string(i) + " out of range");
  if (auto c = std::get_if<Condition>(&t)) return c->child(static_cast<std::size_t>(i - 1));
  const auto& a = std::get<NumberTerm>(t);
  auto idx = static_cast<std::size_t>(i - 1);
  if (idx < a.conds().size()) return a.conds()[idx];
  return a.args()[idx - a.conds().size()];
}

// Copy letter contributed by a node, or 0 for none.
char copy_letter(const AnyTerm& t) {
  if (auto c = std::get_if<Condition>(&t)) {
    if (c->kind() == CondKind::Copy0) return '0';
    if (c->kind() == CondKind::Copy1) return '1';
    return 0;
  }
  const auto& a = std::get<NumberTerm>(t);
  if (a.kind() == NumKind::Copy0) return '0';
  if (a.kind() == NumKind::Copy1) return '1';
  return 0;
}

// Leaf identity for the unique-exponent check; empty for inner nodes.
std::string leaf_key(const AnyTerm& t) {
  if (auto c = std::get_if<Condition>(&t)) {
    if (c->kind() == CondKind::Var) return "V:" + c->name();
    if (c->kind() == CondKind::Atom) return "a:" + c->name();
    return {};
  }
  const auto& a = std::get<NumberTerm>(t);
  if (a.kind() == NumKind::Var) return "n:" + a.name();
  return {};
}

void collect_leaves(const AnyTerm& t, std::string& down, std::map<std::string, std::vector<std::string>>& out) {
  if (auto key = leaf_key(t); !key.empty()) {
    out[key].emplace_back(down.rbegin(), down.rend());
    return;
  }
  char l = copy_letter(t);
  if (l) down.push_back(l);
  for (std::size_t i = 1; i <= child_count(t); ++i) collect_leaves(child(t, static_cast<int>(i)), down, out);
  if (l) down.pop_back();
}

void collect_positions(const AnyTerm& t, Position& p, std::vector<Position>& out) {
  out.push_back(p);
  for (std::size_t i = 1; i <= child_count(t); ++i) {
    p.push_back(static_cast<int>(i));
    collect_positions(child(t, static_cast<int>(i)), p, out);
    p.pop_back();
  }
}

void collect_cond_positions(const NumberTerm& a, Position& p, std::vector<Position>& out) {
  if (a.is_constructor())
    for (std::size_t i = 1; i <= a.conds().size(); ++i) {
      p.push_back(static_cast<int>(i));
      out.push_back(p);
      p.pop_back();
    }
  for (std::size_t j = 0; j < a.args().size(); ++j) {
    p.push_back(static_cast<int>(a.conds().size() + j + 1));
    collect_cond_positions(a.args()[j], p, out);
    p.pop_back();
  }
}

}  // namespace

AnyTerm subterm_at(const AnyTerm& t, const Position& p) {
  AnyTerm cur = t;
  for (int i : p) cur = child(cur, i);
  return cur;
}

ExponentWord copy_exponent(const AnyTerm& t, const Position& p) {
  std::string down;
  AnyTerm cur = t;
  for (int i : p) {
    if (char l = copy_letter(cur)) down.push_back(l);
    cur = child(cur, i);
  }
  return {down.rbegin(), down.rend()};
}

AnyTerm exponentiated_subterm(const AnyTerm& t, const Position& p) {
  AnyTerm sub = subterm_at(t, p);
  for (char l : copy_exponent(t, p)) {
    int bit = l - '0';
    if (auto c = std::get_if<Condition>(&sub))
      sub = Condition::copy(*c, bit);
    else
      sub = NumberTerm::copy(std::get<NumberTerm>(sub), bit);
  }
  return sub;
}

std::vector<Position> all_positions(const AnyTerm& t) {
  std::vector<Position> out;
  Position p;
  collect_positions(t, p, out);
  return out;
}

bool has_unique_exponents(const AnyTerm& t) {
  std::map<std::string, std::vector<std::string>> leaves;
  std::string down;
  collect_leaves(t, down, leaves);
  for (const auto& [key, words] : leaves)
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        if (exponents_comparable(words[i], words[j])) return false;
  return true;
}

std::vector<Position> constructor_condition_positions(const NumberTerm& a) {
  std::vector<Position> out;
  Position p;
  collect_cond_positions(a, p, out);
  return out;
}

namespace {

bool conditions_ok(const NumberTerm& a, const ConditionAlgebra& alg) {
  int limit = alg.config().limit;
  for (const auto& c : a.conds()) {
    if (!is_limited(c, limit)) return false;
    if (a.is_constructor()) {
      if (size(c) != 1) return false;
      if (alg.is_neutral(c)) return false;
    }
  }
  for (const auto& x : a.args())
    if (!conditions_ok(x, alg)) return false;
  return true;
}

}  // namespace

bool is_well_formed_number(const NumberTerm& a, const ConditionAlgebra& alg) {
  if (!alg.config().unsafeMode && !has_unique_exponents(AnyTerm{a})) return false;
  return conditions_ok(a, alg);
}

std::string to_string(const CnType& t) {
  auto num = [](int n) { return n == 1 ? std::string("i") : "i^" + std::to_string(n); };
  if (t.kind == CnType::Kind::Num) return num(t.width);
  return num(t.width) + " -> " + num(t.codomain);
}

CnType typecheck(const NumberTerm& a, const TypeEnv& env) {
  auto need_num = [&](const NumberTerm& x) {
    CnType t = typecheck(x, env);
    if (!(t == CnType::num(1))) throw Error(ErrorKind::IllTyped, "expected a number in " + render(a));
  };
  switch (a.kind()) {
    case NumKind::Var: {
      auto it = env.find(a.name());
      if (it == env.end()) throw Error(ErrorKind::IllTyped, "untyped variable " + a.name());
      if (it->second.kind != CnType::Kind::Num)
        throw Error(ErrorKind::IllTyped, "function symbol used as number: " + a.name());
      return it->second;
    }
    case NumKind::Zero: return CnType::num(1);
    case NumKind::Suc:
    case NumKind::Ann: need_num(a.arg()); return CnType::num(1);
    case NumKind::Tuple:
      for (const auto& x : a.args()) need_num(x);
      return CnType::num(static_cast<int>(a.args().size()));
    case NumKind::Proj: {
      CnType t = typecheck(a.arg(), env);
      if (t.kind != CnType::Kind::Num || a.index() > t.width)
        throw Error(ErrorKind::IllTyped, "projection index out of range in " + render(a));
      return CnType::num(1);
    }
    case NumKind::CondApp:
    case NumKind::Copy0:
    case NumKind::Copy1: return typecheck(a.arg(), env);
    case NumKind::FunApp: {
      auto it = env.find(a.name());
      if (it == env.end() || it->second.kind != CnType::Kind::Arrow)
        throw Error(ErrorKind::IllTyped, "unknown function " + a.name());
      if (static_cast<int>(a.args().size()) != it->second.width)
        throw Error(ErrorKind::IllTyped, "arity mismatch for " + a.name());
      for (const auto& x : a.args()) need_num(x);
      return CnType::num(it->second.codomain);
    }
  }
  throw Error(ErrorKind::IllTyped, "unknown term");
}

std::vector<std::uint64_t> extension(const NumberTerm& a) {
  switch (a.kind()) {
    case NumKind::Zero: return {0};
    case NumKind::Suc: return {1 + extension(a.arg()).at(0)};
    case NumKind::Ann:
    case NumKind::CondApp:
    case NumKind::Copy0:
    case NumKind::Copy1: return extension(a.arg());
    case NumKind::Tuple: {
      std::vector<std::uint64_t> out;
      for (const auto& x : a.args()) {
        auto v = extension(x);
        out.insert(out.end(), v.begin(), v.end());
      }
      return out;
    }
    case NumKind::Proj: {
      auto v = extension(a.arg());
      if (a.index() > static_cast<int>(v.size()))
        throw Error(ErrorKind::NotConstructorNumber, "projection out of range");
      return {v[static_cast<std::size_t>(a.index() - 1)]};
    }
    case NumKind::Var:
    case NumKind::FunApp: break;
  }
  throw Error(ErrorKind::NotConstructorNumber, render(a));
}

}  // namespace cn
