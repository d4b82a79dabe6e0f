#include <fstream>
#include <set>
#include <sstream>

#include "cn/algorithm.hpp"
#include "cn/error.hpp"
#include "cn/syntax.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cn;
using cn::test::num;

namespace {

std::string read_program(const std::string& name) {
  std::ifstream in(std::string(CN_PROGRAMS_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  explicit Fixture(const std::string& src) : alg(cfg), eq(alg), prog(parse_program(src)), eng(prog, eq) {}
  EngineConfig cfg;
  ConditionAlgebra alg;
  Equivalence eq;
  Program prog;
  RewriteEngine eng;

  std::vector<std::vector<NumberTerm>> inputs(const std::string& f, int n = 2, bool ann = false) const {
    return enumerate_ground(argument_names(prog.decl(f).arity), n, ann);
  }
};

const char* kAddVariant = R"(
fun add2 : 2 -> 1
rule [b1] add2(suc{X}(x), y) => suc{X}(add2(x, y))
rule [b2] add2(ann{X0,X1}(x), y) => ann{X0,X1}(add2(x, y))
rule [b3] add2(zero{X}, suc{Y}(y)) => suc{Y}(add2(zero{X}, y))
rule [b4] add2(zero{X}, ann{Y0,Y1}(y)) => ann{Y0,Y1}(add2(zero{X}, y))
rule [b5] add2(zero{X}, zero{Y}) => zero{Y}
)";

}  // namespace

TEST_CASE("ground numbers") {
  CHECK(make_ground("x", {}) == num("zero{x0}"));
  CHECK(make_ground("x", {Shape::Suc}) == num("suc{x1}(zero{x0})"));
  CHECK(make_ground("y", {Shape::Ann, Shape::Suc}) == num("suc{y2}(ann{y1+,y1-}(zero{y0}))"));
  CHECK(shapes(2, true).size() == 7);
  CHECK(shapes(2, false).size() == 3);
  CHECK(shapes(0, true).size() == 1);
  auto g = enumerate_ground({"x"}, 2, true);
  CHECK(g.size() == 7);
  CHECK(enumerate_ground({"x", "y"}, 2, true).size() == 49);
  CHECK(argument_names(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(argument_names(7).back() == "x7");

  ConditionAlgebra alg(EngineConfig{});
  std::set<std::string> seen;
  for (const auto& in : enumerate_ground({"x"}, 3, true)) {
    CHECK(is_well_formed_number(in[0], alg));
    CHECK(is_constructor_number(in[0]));
    CHECK(seen.insert(render(in[0])).second);
  }
}

TEST_CASE("algorithms on the shipped demo program") {
  Fixture f(read_program("demo.cn"));
  CHECK(algo_equal(f.eng, "f", "g", f.inputs("f")) == Verdict::True);
  CHECK(algo_equal(f.eng, "add", "comm", f.inputs("add")) == Verdict::True);
  CHECK(algo_equal(f.eng, "assoc_l", "assoc_r", f.inputs("assoc_l", 1)) == Verdict::True);
  CHECK(algo_equal(f.eng, "add", "sub", f.inputs("add")) == Verdict::False);
  CHECK_THROWS_AS(algo_equal(f.eng, "add", "h", f.inputs("add")), Error);
  CHECK(is_direct(f.eng, "add", f.inputs("add")) == Verdict::True);
  CHECK(is_direct(f.eng, "h", f.inputs("h")) == Verdict::False);
}

TEST_CASE("a changed base case is detected") {
  Fixture f(builtin_source() + std::string(kAddVariant));
  CHECK(algo_equal(f.eng, "add", "add2", f.inputs("add")) == Verdict::False);
  auto m1 = algo_of(f.eng, "add", f.inputs("add"));
  auto m2 = algo_of(f.eng, "add2", f.inputs("add"));
  CHECK(algo_refines(m1, m1) == Verdict::True);
  CHECK(algo_refines(m1, m2) == Verdict::False);
  auto other = algo_of(f.eng, "add", f.inputs("add", 1));
  CHECK_THROWS_AS(algo_refines(m1, other), Error);
}

TEST_CASE("refinement is reflexive and transitive on samples") {
  Fixture f(read_program("demo.cn"));
  auto in = f.inputs("add");
  auto a = algo_of(f.eng, "add", in);
  auto c = algo_of(f.eng, "comm", in);
  auto g = algo_of(f.eng, "g", in);
  CHECK(algo_refines(a, c) == Verdict::True);
  CHECK(algo_refines(c, a) == Verdict::True);
  CHECK(algo_refines(g, g) == Verdict::True);
  CHECK(algo_refines(a, g) == Verdict::False);
}

TEST_CASE("builtin programs") {
  Program p = builtin_programs();
  EngineConfig off, on;
  on.s6 = true;
  CHECK(p.rules_of("add", off).size() == 5);
  CHECK(p.rules_of("sub", off).size() == 5);
  CHECK(p.rules_of("sub", on).size() == 6);
  CHECK(p.decl("add").arity == 2);
  CHECK_THROWS_AS(p.decl("mul"), Error);
}

TEST_CASE("incomplete search yields unknown") {
  Fixture f(read_program("demo.cn"));
  f.cfg.maxStates = 1;
  ConditionAlgebra alg(f.cfg);
  Equivalence eq(alg);
  RewriteEngine eng(f.prog, eq);
  CHECK(algo_equal(eng, "add", "comm", f.inputs("add")) == Verdict::Unknown);
}
