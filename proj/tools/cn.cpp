#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cn/algorithm.hpp"
#include "cn/condition_algebra.hpp"
#include "cn/error.hpp"
#include "cn/program.hpp"
#include "cn/rewrite.hpp"
#include "cn/syntax.hpp"

namespace {

enum Exit { Ok = 0, Negative = 1, Unknown = 2, Failure = 3 };

struct Options {
  cn::EngineConfig cfg;
  std::vector<std::string> programs;
  std::string format = "text";
  int maxValue = 2;
  bool includeAnn = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cn::Error(cn::ErrorKind::Validation, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cn::Program load_program(const Options& o) {
  if (o.programs.empty()) return cn::builtin_programs();
  cn::Program p;
  for (const auto& path : o.programs) p.merge(cn::parse_program_raw(read_file(path)));
  auto report = cn::validate_program(p);
  if (!report.ok()) throw cn::Error(cn::ErrorKind::Validation, "\n" + report.to_string());
  return p;
}

class Printer {
 public:
  explicit Printer(const Options& o) : lines_(o.format == "lines") {}

  // One result: "verdict<TAB>payload" in lines mode, "payload" otherwise.
  void result(const std::string& verdict, const std::string& payload) const {
    if (lines_)
      std::cout << verdict << '\t' << payload << '\n';
    else
      std::cout << (payload.empty() ? verdict : payload) << '\n';
  }
  void note(const std::string& text) const {
    if (lines_)
      std::cout << "note\t" << text << '\n';
    else
      std::cout << text << '\n';
  }

 private:
  bool lines_;
};

int verdict_exit(cn::Verdict v) {
  return v == cn::Verdict::True ? Ok : v == cn::Verdict::False ? Negative : Unknown;
}

int print_reach(const Printer& out, const cn::ReachResult& r) {
  for (const auto& c : r.classes) out.result("class", cn::render(c.rep));
  std::ostringstream s;
  s << r.classes.size() << " class(es), " << r.states << " states, " << (r.complete ? "complete" : "incomplete");
  out.note(s.str());
  return r.complete ? Ok : Unknown;
}

std::vector<std::vector<cn::NumberTerm>> inputs_for(const cn::RewriteEngine& eng, const std::string& f,
                                                    const Options& o) {
  const auto& d = eng.program().decl(f);
  return cn::enumerate_ground(cn::argument_names(d.arity), o.maxValue, o.includeAnn);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructed-numbers rewriting engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--limit", o.cfg.limit, "Size limit of condition subterms (>= 3)")->check(CLI::Range(3, 64));
  app.add_flag("--s6", o.cfg.s6, "Enable the truncating subtraction rule");
  app.add_flag("--bracket-ext", o.cfg.bracketExt, "Push inverse and copies into brackets");
  app.add_option("--max-states", o.cfg.maxStates, "Search budget in states");
  app.add_option("--max-term-size", o.cfg.maxTermSize, "Constructors allowed per search state");
  app.add_option("--max-value", o.maxValue, "Constructors per ground argument")->check(CLI::Range(0, 8));
  app.add_flag("--include-ann", o.includeAnn, "Also enumerate ground arguments with ann constructors");
  app.add_flag("--unsafe", o.cfg.unsafeMode, "Disable the unique-exponent checks");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "lines"}));
  app.add_option("--program", o.programs, "Program file (repeatable); the builtin add/sub when absent")
      ->allow_extra_args(false);

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "Validate program files");
  check->add_option("files", files, "Program files")->required();

  std::string a, b;
  bool direct = false;
  auto* ncond = app.add_subcommand("normalize-cond", "Canonical form of a condition");
  ncond->add_option("condition", a)->required();
  auto* eqcond = app.add_subcommand("eq-cond", "Decide equality of two conditions");
  eqcond->add_option("a", a)->required();
  eqcond->add_option("b", b)->required();
  eqcond->add_flag("--direct", direct, "Use the restricted theory of direct reduction");

  auto* reduce = app.add_subcommand("reduce", "One-step rule neighbors of a number term");
  reduce->add_option("term", a)->required();
  bool smooth = false;
  reduce->add_flag("--smooth", smooth, "Also list one-step smooth-equality neighbors");
  auto* nforms = app.add_subcommand("normal-forms", "Constructor classes reachable by equality reduction");
  nforms->add_option("term", a)->required();
  auto* dforms = app.add_subcommand("direct-forms", "Constructor classes reachable by direct reduction");
  dforms->add_option("term", a)->required();
  auto* numeq = app.add_subcommand("num-equal", "Mutual reachability of two number terms");
  numeq->add_option("a", a)->required();
  numeq->add_option("b", b)->required();
  auto* algoeq = app.add_subcommand("algo-equal", "Compare two functions on ground inputs");
  algoeq->add_option("f", a)->required();
  algoeq->add_option("g", b)->required();
  auto* isdirect = app.add_subcommand("is-direct", "Check a function for directness on ground inputs");
  isdirect->add_option("f", a)->required();
  auto* demo = app.add_subcommand("demo-unsafe", "Trace deriving A^0 = A^1 without the exponent checks");
  a = "A";
  demo->add_option("condition", a, "The condition A");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Failure;
  }

  const Printer out(o);
  try {
    o.cfg.validate();
    if (check->parsed()) {
      cn::Program p;
      for (const auto& path : files) p.merge(cn::parse_program_raw(read_file(path)));
      auto report = cn::validate_program(p);
      for (const auto& i : report.issues)
        out.result(i.warning ? "warning" : "error",
                   i.rule + (i.position.empty() ? "" : " (" + i.position + ")") + ": " + i.message);
      std::ostringstream s;
      s << p.funs.size() << " function(s), " << p.rules.size() << " rule(s)";
      out.result(report.ok() ? "ok" : "invalid", s.str());
      return report.ok() ? Ok : Negative;
    }

    cn::ConditionAlgebra alg(o.cfg);
    if (ncond->parsed()) {
      auto c = alg.canonicalize(cn::parse_condition(a, alg));
      out.result(c.complete ? "ok" : "incomplete", cn::render(c.rep));
      return c.complete ? Ok : Unknown;
    }
    if (eqcond->parsed()) {
      auto x = cn::parse_condition(a, alg);
      auto y = cn::parse_condition(b, alg);
      bool eq = direct ? alg.cond_equal_direct(x, y) : alg.cond_equal(x, y);
      out.result(eq ? "equal" : "not equal", "");
      return eq ? Ok : Negative;
    }
    if (demo->parsed()) {
      auto c = cn::parse_condition_raw(a);
      if (!o.cfg.unsafeMode) {
        // With the checks on, the first product of the derivation is refused.
        alg.cond_product(c, cn::Condition::inverse(c));
      }
      auto t = alg.unsafe_closure_demo(c);
      out.note("A A^- = I:");
      for (const auto& s : t.annihilation) out.result("step", cn::render(s.term) + "   [" + s.law + "]");
      out.note("A^0 = A^1:");
      for (const auto& s : t.contradiction) out.result("step", cn::render(s.term) + "   [" + s.law + "]");
      out.result(t.verified ? "verified" : "unverified", "");
      return t.verified ? Ok : Negative;
    }

    cn::Program prog = load_program(o);
    cn::Equivalence eq(alg);
    cn::RewriteEngine eng(prog, eq);
    if (reduce->parsed()) {
      auto t = cn::parse_number(a, alg);
      for (const auto& n : eng.rule_step_neighbors(t)) out.result("rule", cn::render(n));
      if (smooth)
        for (const auto& n : eq.smooth_neighbors(t)) out.result("smooth", cn::render(n));
      return Ok;
    }
    if (nforms->parsed()) return print_reach(out, eng.reach_normal_forms(cn::parse_number(a, alg)));
    if (dforms->parsed()) return print_reach(out, eng.direct_reach(cn::parse_number(a, alg)));
    if (numeq->parsed()) {
      std::string warning;
      auto v = eng.numbers_equal(cn::parse_number(a, alg), cn::parse_number(b, alg), &warning);
      if (!warning.empty()) std::cerr << "warning: " << warning << '\n';
      out.result(cn::to_string(v), "");
      return verdict_exit(v);
    }
    if (algoeq->parsed()) {
      auto inputs = inputs_for(eng, a, o);
      auto v = cn::algo_equal(eng, a, b, inputs);
      out.result(cn::to_string(v), a + " vs " + b + " on " + std::to_string(inputs.size()) + " input(s): " +
                                       cn::to_string(v));
      return verdict_exit(v);
    }
    if (isdirect->parsed()) {
      auto inputs = inputs_for(eng, a, o);
      auto v = cn::is_direct(eng, a, inputs);
      out.result(cn::to_string(v), a + " on " + std::to_string(inputs.size()) + " input(s): " + cn::to_string(v));
      return verdict_exit(v);
    }
  } catch (const cn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Failure;
  }
  return Failure;
}
