#include <random>

#include "cn/condition_algebra.hpp"
#include "cn/error.hpp"
#include "cn/term_model.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cn;
using cn::test::cond;
using cn::test::num;

namespace {

// The worked example term: copies on X and on y seen from the leaf upward.
NumberTerm example_term() { return num("add(suc{(X^0- Y)^1}(y^10), z)^0"); }

int size_by_table(const Condition& c) {
  switch (c.kind()) {
    case CondKind::Neutral: return 0;
    case CondKind::Var:
    case CondKind::Atom:
    case CondKind::Bracket: return 1;
    case CondKind::Product: return size_by_table(c.left()) + size_by_table(c.right());
    default: return size_by_table(c.inner());
  }
}

int copies_above(const AnyTerm& t, const Position& p) {
  int n = 0;
  AnyTerm cur = t;
  for (int i : p) {
    if (auto c = std::get_if<Condition>(&cur))
      n += c->kind() == CondKind::Copy0 || c->kind() == CondKind::Copy1;
    else
      n += std::get<NumberTerm>(cur).kind() == NumKind::Copy0 || std::get<NumberTerm>(cur).kind() == NumKind::Copy1;
    Position step{i};
    cur = subterm_at(cur, step);
  }
  return n;
}

}  // namespace

TEST_CASE("size follows the table") {
  CHECK(size(Condition::neutral()) == 0);
  CHECK(size(cond("[X Y]")) == 1);
  CHECK(size(cond("X x0^-")) == 2);
  CHECK(size(cond("X^0 Y^1- [a b c]")) == 3);
  CHECK(size(cond("I I")) == 0);
}

TEST_CASE("size is additive and nonnegative on random terms") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Condition a = test::random_condition(rng, 4);
    Condition b = test::random_condition(rng, 4);
    CHECK(size(a) >= 0);
    CHECK(size(a) == size_by_table(a));
    CHECK(size(Condition::product(a, b)) == size(a) + size(b));
    CHECK(size(Condition::bracket(a)) == 1);
  }
}

TEST_CASE("subterm_at addresses children from 1") {
  AnyTerm t = cond("X Y");
  CHECK(std::get<Condition>(subterm_at(t, {1})) == Condition::var("X"));
  CHECK(std::get<Condition>(subterm_at(t, {2})) == Condition::var("Y"));
  AnyTerm s = num("suc{A}(zero{B})");
  CHECK(std::get<Condition>(subterm_at(s, {2, 1})) == Condition::var("B"));
  CHECK_THROWS_AS(subterm_at(t, {3}), Error);
  CHECK_THROWS_AS(subterm_at(t, {1, 1}), Error);
}

TEST_CASE("copy exponents of the worked example") {
  AnyTerm t = example_term();
  Position px = test::find_position(t, [](const AnyTerm& s) { return test::is_cond_leaf(s, "X"); });
  Position py = test::find_position(t, [](const AnyTerm& s) { return test::is_num_var(s, "y"); });
  REQUIRE(!px.empty());
  REQUIRE(!py.empty());
  CHECK(std::get<Condition>(subterm_at(t, px)) == Condition::var("X"));
  CHECK(copy_exponent(t, px) == "010");
  CHECK(copy_exponent(t, py) == "100");
  AnyTerm plain = cond("X Y^-");
  for (const auto& p : all_positions(plain)) CHECK(copy_exponent(plain, p).empty());
}

TEST_CASE("copy exponent letters match the copies above a position") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    AnyTerm t = test::random_condition(rng, 4);
    for (const auto& p : all_positions(t)) {
      auto w = copy_exponent(t, p);
      CHECK(static_cast<int>(w.size()) == copies_above(t, p));
      for (char l : w) CHECK((l == '0' || l == '1'));
    }
  }
}

TEST_CASE("prefix order on exponent words") {
  CHECK(exponent_leq("", "01"));
  CHECK(exponent_leq("0", "01"));
  CHECK_FALSE(exponent_leq("1", "01"));
  CHECK(exponents_comparable("01", "0"));
  CHECK_FALSE(exponents_comparable("00", "01"));
}

TEST_CASE("unique exponents") {
  CHECK(has_unique_exponents(AnyTerm(cond("X^0 X^1"))));
  CHECK_FALSE(has_unique_exponents(AnyTerm(cond("X X^-"))));
  // X^01 is (X^0)^1; its word read upward is 01, and 0 is a prefix of it.
  CHECK_FALSE(has_unique_exponents(AnyTerm(Condition::product(cond("X^0"), cond("X^01")))));
  // (X^1)^0 reads 10, incomparable with 0.
  CHECK(has_unique_exponents(AnyTerm(Condition::product(cond("X^0"), cond("X^10")))));
  CHECK_FALSE(has_unique_exponents(AnyTerm(num("add(x, x)"))));
  CHECK(has_unique_exponents(AnyTerm(num("add(x^0, x^1)"))));
}

TEST_CASE("unique exponents pass to subterms without copies above them") {
  std::mt19937_64 rng(3);
  int unique_terms = 0;
  for (int i = 0; i < 500; ++i) {
    AnyTerm t = test::random_condition(rng, 4);
    if (!has_unique_exponents(t)) continue;
    ++unique_terms;
    for (const auto& p : all_positions(t))
      if (copy_exponent(t, p).empty()) CHECK(has_unique_exponents(subterm_at(t, p)));
  }
  CHECK(unique_terms > 50);
  // Below a copy the property can be lost: X^0 X^10 is unique, X X^1 is not.
  AnyTerm t = cond("(X X^1)^0");
  CHECK(has_unique_exponents(t));
  CHECK_FALSE(has_unique_exponents(subterm_at(t, {1})));
}

TEST_CASE("well-formed numbers") {
  ConditionAlgebra alg(EngineConfig{});
  CHECK(is_well_formed_number(num("suc{X}(zero{Y})"), alg));
  CHECK_FALSE(is_well_formed_number(num("zero{I}"), alg));
  CHECK_FALSE(is_well_formed_number(num("zero{[I]}"), alg));
  CHECK_FALSE(is_well_formed_number(num("zero{X^0 X^1-}"), alg));
  CHECK_FALSE(is_well_formed_number(num("suc{X}(suc{X}(zero{Y}))"), alg));
  CHECK_FALSE(is_well_formed_number(num("zero{X Y}"), alg));
  CHECK(is_well_formed_number(num("zero{[X Y]}"), alg));
  CHECK_FALSE(is_well_formed_number(num("zero{[[X Y Z] a b c]}"), alg));
}

TEST_CASE("exponentiated subterms") {
  AnyTerm c1 = cond("X^1");
  Position px = test::find_position(c1, [](const AnyTerm& s) { return test::is_cond_leaf(s, "X"); });
  CHECK(std::get<Condition>(exponentiated_subterm(c1, px)) == cond("X^1"));
  AnyTerm plain = cond("X Y");
  CHECK(std::get<Condition>(exponentiated_subterm(plain, {2})) == Condition::var("Y"));
  AnyTerm t = example_term();
  px = test::find_position(t, [](const AnyTerm& s) { return test::is_cond_leaf(s, "X"); });
  // Letters are applied innermost first: ((X^0)^1)^0.
  CHECK(std::get<Condition>(exponentiated_subterm(t, px)) == cond("X^010"));
}

TEST_CASE("typing") {
  TypeEnv env{{"a", CnType::num()}, {"b", CnType::num()}, {"add", CnType::arrow(2, 1)}};
  CHECK(typecheck(num("zero{X}"), env) == CnType::num());
  CHECK(typecheck(num("2 ! (a, b)"), env) == CnType::num());
  CHECK(typecheck(num("(a, b)"), env) == CnType::num(2));
  CHECK(typecheck(num("add(a, suc{X}(b))"), env) == CnType::num());
  CHECK_THROWS_AS(typecheck(num("3 ! (a, b)"), env), Error);
  CHECK_THROWS_AS(typecheck(num("add(a)"), env), Error);
  CHECK_THROWS_AS(typecheck(num("c"), env), Error);
  CHECK(to_string(CnType::num(2)) == "i^2");
}

TEST_CASE("extension erases conditions and ann") {
  CHECK(extension(num("suc{A}(zero{B})")) == std::vector<std::uint64_t>{1});
  CHECK(extension(num("suc{A}(ann{B,C}(zero{D}))")) == std::vector<std::uint64_t>{1});
  CHECK(extension(num("zero{A}")) == std::vector<std::uint64_t>{0});
  CHECK(extension(num("(suc{A}(zero{B}), zero{C})")) == std::vector<std::uint64_t>{1, 0});
  CHECK(extension(num("1 ! (suc{A}(zero{B}), zero{C})")) == std::vector<std::uint64_t>{1});
  CHECK(extension(num("suc{A}(zero{B})^0")) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(extension(num("add(zero{A}, zero{B})")), Error);
  CHECK_THROWS_AS(extension(num("x")), Error);
}
