#include "cn/program.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "cn/error.hpp"
#include "cn/syntax.hpp"

namespace cn {

std::vector<const Rule*> Program::rules_of(const std::string& f, const EngineConfig& cfg) const {
  std::vector<const Rule*> out;
  for (const auto& r : rules)
    if (r.fun == f && (!r.optional || cfg.s6)) out.push_back(&r);
  return out;
}

const FunDecl& Program::decl(const std::string& f) const {
  auto it = funs.find(f);
  if (it == funs.end()) throw Error(ErrorKind::UndeclaredFunction, f);
  return it->second;
}

TypeEnv Program::type_env() const {
  TypeEnv env;
  for (const auto& [name, d] : funs) env[name] = CnType::arrow(d.arity, d.codomain);
  return env;
}

void Program::merge(const Program& other) {
  for (const auto& [name, d] : other.funs) {
    auto it = funs.find(name);
    if (it != funs.end() && (it->second.arity != d.arity || it->second.codomain != d.codomain))
      throw Error(ErrorKind::Validation, "conflicting declarations of " + name);
    funs[name] = d;
  }
  rules.insert(rules.end(), other.rules.begin(), other.rules.end());
}

bool ValidationReport::ok() const {
  for (const auto& i : issues)
    if (!i.warning) return false;
  return true;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& i : issues) {
    os << (i.warning ? "warning: " : "error: ") << i.rule;
    if (!i.position.empty()) os << " (" << i.position << ")";
    os << ": " << i.message << "\n";
  }
  return os.str();
}

Program parse_program_raw(std::string_view src) {
  detail::Scanner sc(src);
  Program p;
  std::map<std::string, int> counts;
  auto line_at = [&](std::size_t pos) {
    int line = 1;
    for (std::size_t i = 0; i < pos && i < src.size(); ++i)
      if (src[i] == '\n') ++line;
    return line;
  };
  while (!sc.at_end()) {
    std::size_t start = sc.pos();
    std::string kw = sc.identifier();
    if (kw == "fun") {
      FunDecl d;
      d.name = sc.identifier();
      sc.expect(":");
      d.arity = static_cast<int>(sc.integer());
      sc.expect("->");
      d.codomain = static_cast<int>(sc.integer());
      if (d.arity < 1 || d.codomain < 1) sc.fail("arities must be positive");
      if (p.funs.count(d.name)) sc.fail("function " + d.name + " declared twice");
      p.funs[d.name] = d;
      continue;
    }
    Rule r;
    if (kw == "optional") {
      r.optional = true;
      kw = sc.identifier();
    }
    if (kw != "rule") sc.fail("expected 'fun' or 'rule'");
    r.line = line_at(start);
    if (sc.accept("[")) {
      r.label = sc.identifier();
      sc.expect("]");
    }
    r.fun = sc.identifier();
    if (r.label.empty()) r.label = r.fun + "#" + std::to_string(counts[r.fun] + 1);
    ++counts[r.fun];
    sc.set_options(ParseOptions{r.fun});
    sc.expect("(");
    r.lhs.push_back(sc.number());
    while (sc.accept(",")) r.lhs.push_back(sc.number());
    sc.expect(")");
    sc.expect("=>");
    r.rhs = sc.number();
    sc.set_options({});
    p.rules.push_back(std::move(r));
  }
  return p;
}

Program parse_program(std::string_view src) {
  Program p = parse_program_raw(src);
  auto report = validate_program(p);
  if (!report.ok()) throw Error(ErrorKind::Validation, "\n" + report.to_string());
  return p;
}

namespace {

struct Vars {
  std::multiset<std::string> nums, conds, atoms;
};

void collect_cond(const Condition& c, Vars& v) {
  if (c.kind() == CondKind::Var) v.conds.insert(c.name());
  if (c.kind() == CondKind::Atom) v.atoms.insert(c.name());
  for (std::size_t i = 0; i < c.child_count(); ++i) collect_cond(c.child(i), v);
}

void collect(const NumberTerm& a, Vars& v) {
  if (a.kind() == NumKind::Var) v.nums.insert(a.name());
  for (const auto& c : a.conds()) collect_cond(c, v);
  for (const auto& x : a.args()) collect(x, v);
}

bool pattern_condition(const Condition& c) {
  if (c.kind() == CondKind::Var) return true;
  if (c.kind() != CondKind::Bracket) return false;
  auto fs = factors(c.inner());
  if (fs.size() < 2) return false;
  for (const auto& f : fs)
    if (f.kind() != CondKind::Var) return false;
  return true;
}

// Returns a description of the first offending subterm, or "".
std::string pattern_problem(const NumberTerm& a) {
  switch (a.kind()) {
    case NumKind::Var: return {};
    case NumKind::Zero:
    case NumKind::Suc:
    case NumKind::Ann:
      for (const auto& c : a.conds())
        if (!pattern_condition(c))
          return "constructor condition " + render(c) + " is neither X nor [X1 ... Xj] with j >= 2";
      if (a.kind() != NumKind::Zero) return pattern_problem(a.arg());
      return {};
    default: return render(a) + " is not a number variable or constructor";
  }
}

bool atom_of(const std::string& atom, const std::string& fun) {
  if (atom.size() <= fun.size() || atom.compare(0, fun.size(), fun) != 0) return false;
  for (std::size_t i = fun.size(); i < atom.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(atom[i]))) return false;
  return true;
}

// Constructor conditions of the right side must have size 1.
void rhs_constructors(const NumberTerm& a, const std::string& pos, std::vector<std::string>& bad) {
  if (a.is_constructor())
    for (const auto& c : a.conds())
      if (size(c) != 1) bad.push_back(pos + ": " + render(c));
  for (std::size_t i = 0; i < a.args().size(); ++i) rhs_constructors(a.args()[i], pos, bad);
}

void rhs_anns(const NumberTerm& a, const std::set<std::string>& bound, std::vector<std::string>& bad) {
  if (a.kind() == NumKind::Ann)
    for (const auto& c : a.conds())
      if (c.kind() != CondKind::Var || !bound.count(c.name())) bad.push_back(render(c));
  for (const auto& x : a.args()) rhs_anns(x, bound, bad);
}

bool patterns_overlap(const NumberTerm& a, const NumberTerm& b) {
  if (a.kind() == NumKind::Var || b.kind() == NumKind::Var) return true;
  if (a.kind() != b.kind()) {
    // suc and ann patterns can match the same chain through the exchange laws
    bool chains = (a.kind() == NumKind::Suc || a.kind() == NumKind::Ann) &&
                  (b.kind() == NumKind::Suc || b.kind() == NumKind::Ann);
    return chains;
  }
  if (a.kind() == NumKind::Zero) return true;
  return patterns_overlap(a.arg(), b.arg());
}

}  // namespace

ValidationReport validate_program(const Program& p) {
  ValidationReport rep;
  auto issue = [&](const Rule& r, std::string pos, std::string msg, bool warning = false) {
    rep.issues.push_back({r.label, std::move(pos), std::move(msg), warning});
  };
  std::map<std::string, std::multiset<std::string>> atoms_by_fun;
  for (const auto& r : p.rules) {
    auto it = p.funs.find(r.fun);
    if (it == p.funs.end()) {
      issue(r, "", "undeclared function " + r.fun);
      continue;
    }
    const FunDecl& d = it->second;
    if (static_cast<int>(r.lhs.size()) != d.arity)
      issue(r, "lhs", "expected " + std::to_string(d.arity) + " arguments, got " + std::to_string(r.lhs.size()));

    Vars left;
    for (std::size_t i = 0; i < r.lhs.size(); ++i) {
      if (auto why = pattern_problem(r.lhs[i]); !why.empty()) issue(r, "lhs " + std::to_string(i + 1), why);
      collect(r.lhs[i], left);
    }
    std::set<std::string> seen;
    for (const auto& v : left.nums)
      if (left.nums.count(v) > 1 && seen.insert("n" + v).second)
        issue(r, "lhs", "left-linearity: number variable " + v + " occurs more than once");
    for (const auto& v : left.conds)
      if (left.conds.count(v) > 1 && seen.insert("c" + v).second)
        issue(r, "lhs", "left-linearity: condition variable " + v + " occurs more than once");

    Vars right;
    collect(r.rhs, right);
    std::set<std::string> lnums(left.nums.begin(), left.nums.end());
    std::set<std::string> lconds(left.conds.begin(), left.conds.end());
    for (const auto& v : std::set<std::string>(right.nums.begin(), right.nums.end()))
      if (!lnums.count(v)) issue(r, "rhs", "number variable " + v + " does not come from the left side");
    for (const auto& v : std::set<std::string>(right.conds.begin(), right.conds.end()))
      if (!lconds.count(v)) issue(r, "rhs", "condition variable " + v + " does not come from the left side");
    for (const auto& a : right.atoms) {
      if (!atom_of(a, r.fun)) issue(r, "rhs", "atom " + a + " is not of the form " + r.fun + "<i>");
      atoms_by_fun[r.fun].insert(a);
    }
    std::vector<std::string> bad;
    rhs_anns(r.rhs, lconds, bad);
    for (const auto& c : bad) issue(r, "rhs", "ann condition " + c + " is not a condition variable from the left side");
    bad.clear();
    rhs_constructors(r.rhs, "rhs", bad);
    for (const auto& c : bad) issue(r, "rhs", "constructor condition of size other than 1 at " + c);
    if (!has_unique_exponents(AnyTerm(r.rhs))) issue(r, "rhs", "copy exponents are not unique");

    TypeEnv env = p.type_env();
    for (const auto& v : lnums) env[v] = CnType::num(1);
    try {
      CnType t = typecheck(r.rhs, env);
      if (!(t == CnType::num(d.codomain)))
        issue(r, "rhs", "has type " + to_string(t) + ", expected " + to_string(CnType::num(d.codomain)));
    } catch (const Error& e) {
      issue(r, "rhs", e.what());
    }
  }
  for (const auto& [f, atoms] : atoms_by_fun)
    for (const auto& a : std::set<std::string>(atoms.begin(), atoms.end()))
      if (atoms.count(a) > 1)
        rep.issues.push_back({f, "rhs", "atom " + a + " is used more than once in the rules of " + f, false});

  for (std::size_t i = 0; i < p.rules.size(); ++i)
    for (std::size_t j = i + 1; j < p.rules.size(); ++j) {
      const Rule& a = p.rules[i];
      const Rule& b = p.rules[j];
      if (a.fun != b.fun || a.lhs.size() != b.lhs.size()) continue;
      bool all = true;
      for (std::size_t k = 0; k < a.lhs.size() && all; ++k) all = patterns_overlap(a.lhs[k], b.lhs[k]);
      if (all) issue(a, "lhs", "overlaps with rule " + b.label, true);
    }
  return rep;
}

}  // namespace cn
