#include <functional>
#include <random>

#include "cn/condition_algebra.hpp"
#include "cn/condition_laws.hpp"
#include "cn/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cn;
using cn::test::cond;
using C = Condition;

namespace {

bool well_formed(const ConditionAlgebra& alg, const C& c) {
  try {
    alg.check_well_formed(c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Checks lhs = rhs over random instances for which both sides are well-formed.
void law(const ConditionAlgebra& alg, const char* name, int arity,
         const std::function<std::pair<C, C>(const std::vector<C>&)>& build, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  for (int tries = 0; done < samples && tries < samples * 200; ++tries) {
    std::vector<C> xs;
    for (int i = 0; i < arity; ++i) xs.push_back(test::random_condition(rng, 2));
    auto [l, r] = build(xs);
    if (!well_formed(alg, l) || !well_formed(alg, r)) continue;
    ++done;
    CHECK_MESSAGE(alg.cond_equal(l, r), name << ": " << render(l) << " = " << render(r));
  }
  CHECK_MESSAGE(done == samples, name);
}

}  // namespace

TEST_CASE("equations of the condition algebra hold") {
  ConditionAlgebra alg(EngineConfig{});
  const int n = 100;
  law(alg, "associativity", 3, [](auto& x) { return std::pair{C::product(C::product(x[0], x[1]), x[2]), C::product(x[0], C::product(x[1], x[2]))}; }, n, 1);
  law(alg, "commutativity", 2, [](auto& x) { return std::pair{C::product(x[0], x[1]), C::product(x[1], x[0])}; }, n, 2);
  law(alg, "unit", 1, [](auto& x) { return std::pair{C::product(x[0], C::neutral()), x[0]}; }, n, 3);
  law(alg, "double inverse", 1, [](auto& x) { return std::pair{C::inverse(C::inverse(x[0])), x[0]}; }, n, 4);
  law(alg, "inverse of a product", 2, [](auto& x) { return std::pair{C::inverse(C::product(x[0], x[1])), C::product(C::inverse(x[0]), C::inverse(x[1]))}; }, n, 5);
  law(alg, "copy 0 of a product", 2, [](auto& x) { return std::pair{C::copy0(C::product(x[0], x[1])), C::product(C::copy0(x[0]), C::copy0(x[1]))}; }, n, 6);
  law(alg, "copy 1 of a product", 2, [](auto& x) { return std::pair{C::copy1(C::product(x[0], x[1])), C::product(C::copy1(x[0]), C::copy1(x[1]))}; }, n, 7);
  law(alg, "bracket merge", 2, [](auto& x) { return std::pair{C::product(C::bracket(x[0]), C::bracket(x[1])), C::bracket(C::product(x[0], x[1]))}; }, n, 8);
  law(alg, "annihilation", 1, [](auto& x) { return std::pair{C::product(C::copy0(x[0]), C::inverse(C::copy1(x[0]))), C::neutral()}; }, n, 9);
  law(alg, "merge", 1, [](auto& x) { return std::pair{C::product(C::copy0(x[0]), C::copy1(x[0])), x[0]}; }, n, 10);
  CHECK(alg.cond_equal(C::bracket(C::neutral()), C::neutral()));
}

TEST_CASE("identities of the neutral element") {
  ConditionAlgebra alg(EngineConfig{});
  const C I = C::neutral();
  CHECK(alg.cond_equal(I, C::inverse(I)));
  CHECK(alg.cond_equal(I, C::copy0(I)));
  CHECK(alg.cond_equal(I, C::copy1(I)));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    C a = test::random_condition(rng, 3);
    C t = C::product(C::copy1(a), C::inverse(C::copy0(a)));
    if (!well_formed(alg, t)) continue;
    CHECK_MESSAGE(alg.cond_equal(t, I), render(t));
  }
}

TEST_CASE("A A^- is only formed for A = I") {
  ConditionAlgebra alg(EngineConfig{});
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    C a = test::random_condition(rng, 3);
    bool has_leaf = false;
    for (const auto& p : all_positions(a)) has_leaf = has_leaf || std::get<C>(subterm_at(a, p)).is_leaf();
    if (!well_formed(alg, a) || !has_leaf) continue;
    CHECK_THROWS_AS(alg.cond_product(a, C::inverse(a)), Error);
  }
  CHECK(alg.cond_equal(alg.cond_product(C::neutral(), C::inverse(C::neutral())), C::neutral()));
}

TEST_CASE("cond_equal examples") {
  ConditionAlgebra alg(EngineConfig{});
  CHECK(alg.cond_equal(cond("A^0 A^1"), cond("A")));
  CHECK(alg.cond_equal(cond("A^1 A^0-"), cond("I")));
  CHECK_FALSE(alg.cond_equal(cond("X^0"), cond("X^1")));
  CHECK_FALSE(alg.cond_equal(cond("X"), cond("Y")));
  CHECK_FALSE(alg.cond_equal(cond("X^0-"), cond("X^-0")));
  CHECK(alg.cond_equal(cond("[X Y]"), cond("[X] [Y]")));
  CHECK_FALSE(alg.cond_equal(cond("[X Y]"), cond("X Y")));
  CHECK_THROWS_AS(alg.cond_equal(cond("X X^-"), cond("I")), Error);
  // Letters of a word may be permuted at the top level.
  CHECK(alg.cond_equal(cond("X^110"), cond("X^011")));
}

TEST_CASE("bracket merge respects the limit") {
  ConditionAlgebra alg(EngineConfig{});
  CHECK(alg.cond_equal(cond("[X Y] [Z]"), cond("[X Y Z]")));
  CHECK(alg.cond_equal(cond("[X Y] [Z a]"), cond("[X] [Y Z a]")));
  CHECK_THROWS_AS(alg.check_well_formed(cond("[X Y Z a]")), Error);
  EngineConfig four;
  four.limit = 4;
  ConditionAlgebra wide(four);
  CHECK(wide.cond_equal(cond("[X Y] [Z a]"), cond("[X Y Z a]")));
}

TEST_CASE("direct equality is a restriction") {
  ConditionAlgebra alg(EngineConfig{});
  CHECK_FALSE(alg.cond_equal_direct(cond("A^0 A^1-"), cond("I")));
  CHECK(alg.cond_equal_direct(cond("X Y"), cond("Y X")));
  CHECK(alg.cond_equal_direct(cond("A"), cond("A")));
  CHECK(alg.cond_equal_direct(cond("A"), cond("A^0 A^1")));
  CHECK_FALSE(alg.cond_equal_direct(cond("A^0 A^1"), cond("A")));
  CHECK(alg.cond_equal_direct(cond("[X] [Y]"), cond("[X Y]")));

  std::mt19937_64 rng(13);
  int direct = 0;
  for (int i = 0; i < 300; ++i) {
    C a = test::random_condition(rng, 3);
    C b = test::random_condition(rng, 3);
    if (!well_formed(alg, a) || !well_formed(alg, b)) continue;
    if (alg.cond_equal_direct(a, b)) {
      ++direct;
      CHECK(alg.cond_equal(a, b));
    }
  }
  CHECK(direct > 0);
}

TEST_CASE("cond_product is partial") {
  ConditionAlgebra alg(EngineConfig{});
  CHECK(alg.cond_product(cond("X^0"), cond("X^1")) == cond("X^0 X^1"));
  CHECK_THROWS_AS(alg.cond_product(cond("X"), cond("X^-")), Error);
  CHECK_THROWS_AS(alg.cond_product(cond("[X Y] Z"), cond("[a b] c")), Error);
  CHECK(alg.cond_product(cond("[X Y]"), cond("[[a b] c d]")) == cond("[X Y] [[a b] c d]"));
  try {
    alg.cond_product(cond("X"), cond("X^-"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExponentClash);
  }
}

TEST_CASE("canonicalize") {
  ConditionAlgebra alg(EngineConfig{});
  auto i = alg.canonicalize(C::neutral());
  CHECK(i.is_neutral());
  CHECK(alg.canonicalize(cond("I^0 X")).key == alg.canonicalize(cond("X")).key);
  CHECK(alg.canonicalize(cond("[X Y]")).key == alg.canonicalize(cond("[X] [Y]")).key);

  std::mt19937_64 rng(14);
  for (int k = 0; k < 300; ++k) {
    C a = test::random_condition(rng, 4);
    if (!well_formed(alg, a)) continue;
    auto ca = alg.canonicalize(a);
    CHECK(ca.complete);
    CHECK(size(ca.rep) == ca.size);
    CHECK(size(ca.rep) <= size(a));
    CHECK(alg.canonicalize(ca.rep).key == ca.key);
    // The key does not depend on what the cache saw before.
    ConditionAlgebra fresh(EngineConfig{});
    CHECK_MESSAGE(fresh.canonicalize(a).key == ca.key, render(a));
  }
}

TEST_CASE("canonical forms are invariant under single law steps") {
  EngineConfig cfg;
  ConditionAlgebra alg(cfg);
  std::mt19937_64 rng(15);
  for (int k = 0; k < 200; ++k) {
    C a = test::random_condition(rng, 4);
    if (!well_formed(alg, a)) continue;
    auto key = alg.canonicalize(a).key;
    for (auto& [n, why] : laws::neighbors(a, cfg, {true, true}))
      CHECK_MESSAGE(alg.canonicalize(n).key == key, render(a) << " -> " << render(n) << " by " << why);
  }
}

TEST_CASE("derivations to the representative replay law by law") {
  EngineConfig cfg;
  ConditionAlgebra alg(cfg);
  for (const char* s : {"X^10-", "X^0 X^1", "[X^0] [Y] [X^1]", "(a b)^0 a^1-", "Y^01-0", "[[X a] b^0]^1"}) {
    C a = cond(s);
    auto path = alg.derivation(a);
    REQUIRE(!path.empty());
    CHECK(path.front() == a);
    CHECK(alg.canonicalize(path.back()).key == alg.canonicalize(a).key);
    CHECK(render(path.back()) == render(alg.canonicalize(a).rep));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bool ok = laws::reachable(path[i], path[i + 1], cfg, 20000, 6, {true, false}) ||
                laws::reachable(path[i + 1], path[i], cfg, 20000, 6, {true, false});
      CHECK_MESSAGE(ok, render(path[i]) << " => " << render(path[i + 1]));
    }
  }
}

TEST_CASE("the law oracle") {
  EngineConfig cfg;
  CHECK(laws::reachable(cond("X^0 X^1"), cond("X"), cfg, 1000, 2, {true, false}));
  CHECK(laws::reachable(cond("X^0 X^1-"), cond("I"), cfg, 1000, 2, {true, false}));
  CHECK_FALSE(laws::reachable(cond("X^0"), cond("X^1"), cfg, 5000, 3));
  CHECK(laws::ac_normal(cond("Y I X")) == laws::ac_normal(cond("X Y")));
  for (auto& [n, why] : laws::neighbors(cond("X^0 X^1-"), cfg)) CHECK(!why.empty());
}

TEST_CASE("bracket extension is opt-in") {
  ConditionAlgebra off(EngineConfig{});
  CHECK_FALSE(off.cond_equal(cond("[X Y]^-"), cond("[X^- Y^-]")));
  EngineConfig on;
  on.bracketExt = true;
  ConditionAlgebra ext(on);
  CHECK(ext.cond_equal(cond("[X Y]^-"), cond("[X^- Y^-]")));
  CHECK(ext.cond_equal(cond("[X Y]^0"), cond("[X^0 Y^0]")));
}

TEST_CASE("the contradiction without unique exponents") {
  ConditionAlgebra safe(EngineConfig{});
  CHECK_THROWS_AS(safe.unsafe_closure_demo(cond("X")), Error);

  EngineConfig cfg;
  cfg.unsafeMode = true;
  ConditionAlgebra alg(cfg);
  auto x = alg.unsafe_closure_demo(cond("X"));
  CHECK(x.verified);
  CHECK(x.annihilation.back().term == C::neutral());
  CHECK(x.contradiction.front().term == cond("X^0"));
  CHECK(x.contradiction.back().term == cond("X^1"));

  auto i = alg.unsafe_closure_demo(C::neutral());
  CHECK(i.verified);
  for (const auto& s : i.contradiction) CHECK(s.term == C::neutral());

  auto xy = alg.unsafe_closure_demo(cond("X Y"));
  CHECK(xy.verified);
  CHECK(xy.contradiction.front().term == C::copy0(cond("X Y")));
  CHECK(xy.contradiction.back().term == C::copy1(cond("X Y")));
}

TEST_CASE("limit is validated") {
  EngineConfig bad;
  bad.limit = 2;
  CHECK_THROWS_AS(ConditionAlgebra{bad}, Error);
}
