#include <benchmark/benchmark.h>

#include <random>

#include "cn/algorithm.hpp"
#include "cn/condition_algebra.hpp"
#include "cn/set_condition.hpp"
#include "cn/syntax.hpp"

using namespace cn;
using C = Condition;

namespace {

C random_condition(std::mt19937_64& rng, int depth) {
  int k = std::uniform_int_distribution<int>(0, depth <= 0 ? 1 : 7)(rng);
  switch (k) {
    case 0: return C::var(rng() % 2 ? "X" : "Y");
    case 1: return C::atom(rng() % 2 ? "a" : "b");
    case 2:
    case 3: return C::product(random_condition(rng, depth - 1), random_condition(rng, depth - 1));
    case 4: return C::inverse(random_condition(rng, depth - 1));
    case 5: return C::copy0(random_condition(rng, depth - 1));
    case 6: return C::copy1(random_condition(rng, depth - 1));
    default: return C::bracket(random_condition(rng, depth - 1));
  }
}

std::vector<C> well_formed_sample(const ConditionAlgebra& alg, int depth, std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<C> out;
  while (out.size() < n) {
    C c = random_condition(rng, depth);
    try {
      alg.check_well_formed(c);
      out.push_back(c);
    } catch (const std::exception&) {
    }
  }
  return out;
}

// Fresh cache per iteration: measures the class exploration itself.
void BM_Canonicalize(benchmark::State& st) {
  EngineConfig cfg;
  auto sample = well_formed_sample(ConditionAlgebra(cfg), static_cast<int>(st.range(0)), 64);
  for (auto _ : st) {
    ConditionAlgebra alg(cfg);
    for (const auto& c : sample) benchmark::DoNotOptimize(alg.canonicalize(c));
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(sample.size()));
}
BENCHMARK(BM_Canonicalize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CondEqualCached(benchmark::State& st) {
  ConditionAlgebra alg(EngineConfig{});
  auto sample = well_formed_sample(alg, 3, 64);
  for (auto _ : st)
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) benchmark::DoNotOptimize(alg.cond_equal(sample[i], sample[i + 1]));
}
BENCHMARK(BM_CondEqualCached)->Unit(benchmark::kMicrosecond);

void BM_SetNormalForm(benchmark::State& st) {
  std::vector<ElementaryCondition> es;
  for (int i = 0; i < st.range(0); ++i) {
    es.push_back({"X" + std::to_string(i), "00"});
    es.push_back({"X" + std::to_string(i), "01"});
    es.push_back({"X" + std::to_string(i), "1"});
  }
  SetCondition s = SetCondition::of(es);
  for (auto _ : st) benchmark::DoNotOptimize(normal_form(s));
}
BENCHMARK(BM_SetNormalForm)->RangeMultiplier(4)->Range(1, 64);

void BM_SmoothNeighbors(benchmark::State& st) {
  ConditionAlgebra alg(EngineConfig{});
  Equivalence eq(alg);
  NumberTerm t = parse_number_raw("suc{a}(ann{b,c}(suc{d}(ann{X^0,X^1}(zero{[e f]}))))");
  for (auto _ : st) benchmark::DoNotOptimize(eq.smooth_neighbors(t));
}
BENCHMARK(BM_SmoothNeighbors)->Unit(benchmark::kMicrosecond);

// add and sub on suc-only ground numbers of the given value.
void BM_Reach(benchmark::State& st, const char* fun) {
  EngineConfig cfg;
  ConditionAlgebra alg(cfg);
  Equivalence eq(alg);
  Program prog = builtin_programs();
  RewriteEngine eng(prog, eq);
  ShapeWord w(static_cast<std::size_t>(st.range(0)), Shape::Suc);
  NumberTerm t = NumberTerm::fun_app(fun, {make_ground("x", w), make_ground("y", w)});
  for (auto _ : st) benchmark::DoNotOptimize(eng.reach_normal_forms(t));
}
BENCHMARK_CAPTURE(BM_Reach, add, "add")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reach, sub, "sub")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_AlgoEqualComm(benchmark::State& st) {
  ConditionAlgebra alg(EngineConfig{});
  Equivalence eq(alg);
  Program prog = parse_program(std::string(builtin_source()) + "fun comm : 2 -> 1\nrule comm(x, y) => add(y, x)\n");
  RewriteEngine eng(prog, eq);
  auto inputs = enumerate_ground({"x", "y"}, static_cast<int>(st.range(0)), true);
  for (auto _ : st) benchmark::DoNotOptimize(algo_equal(eng, "add", "comm", inputs));
}
BENCHMARK(BM_AlgoEqualComm)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
