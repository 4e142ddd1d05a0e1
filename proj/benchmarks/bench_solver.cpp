#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "asprl/asp/program.hpp"
#include "asprl/asp/solver.hpp"

using namespace asprl::asp;

namespace {

// k independent even loops: 2^k stable models, pure enumeration stress
Program even_loops(int k) {
  Program p;
  for (int i = 0; i < k; ++i) {
    AtomId a = p.add_atom("a" + std::to_string(i));
    AtomId b = p.add_atom("b" + std::to_string(i));
    p.add_rule(Rule::normal(a, {neg(b)}));
    p.add_rule(Rule::normal(b, {neg(a)}));
  }
  return p;
}

// a chain of facts and implications: one model, pure propagation
Program chain(int n) {
  Program p;
  std::vector<AtomId> atoms;
  for (int i = 0; i < n; ++i) {
    atoms.push_back(p.add_atom("c" + std::to_string(i)));
  }
  p.add_rule(Rule::fact(atoms[0]));
  for (int i = 1; i < n; ++i) {
    p.add_rule(Rule::normal(atoms[i], {pos(atoms[i - 1])}));
  }
  return p;
}

}  // namespace

static void BM_SolveEvenLoops(benchmark::State& state) {
  Program p = even_loops(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto models = solve(p);
    benchmark::DoNotOptimize(models);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_SolveEvenLoops)->Arg(4)->Arg(8)->Arg(10);

static void BM_SolvePropagationChain(benchmark::State& state) {
  Program p = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto models = solve(p);
    benchmark::DoNotOptimize(models);
  }
}
BENCHMARK(BM_SolvePropagationChain)->Arg(64)->Arg(512);

static void BM_SolveChoiceCardinality(benchmark::State& state) {
  // 0 { x1..xn } n lowered to complement atoms and bound constraints
  int n = static_cast<int>(state.range(0));
  Program p;
  std::vector<AtomId> candidates;
  for (int i = 0; i < n; ++i) {
    candidates.push_back(p.add_atom("x" + std::to_string(i)));
  }
  p.add_rule(Rule::choice_rule(0, n, candidates));
  for (auto _ : state) {
    auto models = solve(p);
    benchmark::DoNotOptimize(models);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SolveChoiceCardinality)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
