#include "cn/algorithm.hpp"

#include <algorithm>

#include "cn/error.hpp"

namespace cn {

NumberTerm make_ground(const std::string& var, const ShapeWord& shape) {
  NumberTerm t = NumberTerm::zero(Condition::atom(var + "0"));
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::string n = var + std::to_string(i + 1);
    if (shape[i] == Shape::Suc)
      t = NumberTerm::suc(Condition::atom(n), t);
    else
      t = NumberTerm::ann(Condition::atom(n + "+"), Condition::atom(n + "-"), t);
  }
  return t;
}

std::vector<ShapeWord> shapes(int maxConstructors, bool includeAnn) {
  std::vector<ShapeWord> out{{}};
  std::vector<ShapeWord> layer{{}};
  for (int len = 1; len <= maxConstructors; ++len) {
    std::vector<ShapeWord> next;
    for (const auto& w : layer) {
      auto s = w;
      s.push_back(Shape::Suc);
      next.push_back(s);
      if (includeAnn) {
        s.back() = Shape::Ann;
        next.push_back(s);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::vector<NumberTerm>> enumerate_ground(const std::vector<std::string>& vars, int maxConstructors,
                                                      bool includeAnn) {
  auto ws = shapes(maxConstructors, includeAnn);
  std::vector<std::vector<NumberTerm>> out{{}};
  for (const auto& v : vars) {
    std::vector<std::vector<NumberTerm>> next;
    for (const auto& prefix : out)
      for (const auto& w : ws) {
        auto t = prefix;
        t.push_back(make_ground(v, w));
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> argument_names(int n) {
  static const char* base[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 6 ? base[i] : "x" + std::to_string(i + 1));
  return out;
}

AlgoMap algo_of(const RewriteEngine& eng, const std::string& f, const std::vector<std::vector<NumberTerm>>& inputs) {
  const FunDecl& d = eng.program().decl(f);
  AlgoMap m;
  for (const auto& in : inputs) {
    if (static_cast<int>(in.size()) != d.arity)
      throw Error(ErrorKind::ArityMismatch, f + " takes " + std::to_string(d.arity) + " arguments");
    ReachResult r = eng.reach_normal_forms(NumberTerm::fun_app(f, in));
    m.entries.push_back({in, r.keys(), r.complete});
  }
  return m;
}

Verdict algo_refines(const AlgoMap& m1, const AlgoMap& m2) {
  if (m1.entries.size() != m2.entries.size()) throw Error(ErrorKind::DomainMismatch, "different numbers of inputs");
  bool unknown = false;
  for (std::size_t i = 0; i < m1.entries.size(); ++i) {
    const auto& a = m1.entries[i];
    const auto& b = m2.entries[i];
    if (a.input != b.input) throw Error(ErrorKind::DomainMismatch, "inputs differ at entry " + std::to_string(i + 1));
    bool subset = std::includes(b.classes.begin(), b.classes.end(), a.classes.begin(), a.classes.end());
    if (!subset && b.complete) return Verdict::False;
    if (!subset || !a.complete || !b.complete) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::True;
}

Verdict algo_equal(const RewriteEngine& eng, const std::string& f, const std::string& g,
                   const std::vector<std::vector<NumberTerm>>& inputs) {
  const FunDecl& df = eng.program().decl(f);
  const FunDecl& dg = eng.program().decl(g);
  if (df.arity != dg.arity || df.codomain != dg.codomain)
    throw Error(ErrorKind::ArityMismatch, f + " and " + g + " have different types");
  AlgoMap mf = algo_of(eng, f, inputs);
  AlgoMap mg = algo_of(eng, g, inputs);
  Verdict a = algo_refines(mf, mg);
  Verdict b = algo_refines(mg, mf);
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::True;
}

Verdict is_direct(const RewriteEngine& eng, const std::string& f, const std::vector<std::vector<NumberTerm>>& inputs) {
  const FunDecl& d = eng.program().decl(f);
  bool unknown = false;
  for (const auto& in : inputs) {
    if (static_cast<int>(in.size()) != d.arity)
      throw Error(ErrorKind::ArityMismatch, f + " takes " + std::to_string(d.arity) + " arguments");
    NumberTerm app = NumberTerm::fun_app(f, in);
    ReachResult full = eng.reach_normal_forms(app);
    ReachResult direct = eng.direct_reach(app);
    for (const auto& c : full.classes) {
      if (direct.contains(c.key)) continue;
      if (direct.complete) return Verdict::False;
      unknown = true;
    }
    if (!full.complete) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::True;
}

const char* builtin_source() {
  return R"(fun add : 2 -> 1
rule [a1] add(suc{X}(x), y) => suc{X}(add(x, y))
rule [a2] add(ann{X0,X1}(x), y) => ann{X0,X1}(add(x, y))
rule [a3] add(zero{X}, suc{Y}(y)) => suc{Y}(add(zero{X}, y))
rule [a4] add(zero{X}, ann{Y0,Y1}(y)) => ann{Y0,Y1}(add(zero{X}, y))
rule [a5] add(zero{X}, zero{Y}) => zero{[X Y]}

fun sub : 2 -> 1
rule [s1] sub(suc{X}(x), suc{Y}(y)) => ann{X,Y}(sub(x, y))
rule [s2] sub(x, ann{Y0,Y1}(y)) => ann{Y1,Y0}(sub(x, y))
rule [s3] sub(suc{X}(x), zero{Y}) => suc{X}(sub(x, zero{Y}))
rule [s4] sub(zero{X}, zero{Y}) => zero{[X Y^-]}
rule [s5] sub(ann{X0,X1}(x), y) => ann{X0,X1}(sub(x, y))
optional rule [s6] sub(zero{X}, suc{Y}(y)) => zero{X}
)";
}

Program builtin_programs() { return parse_program(builtin_source()); }

}  // namespace cn
