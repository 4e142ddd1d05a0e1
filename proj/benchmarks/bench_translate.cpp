#include <benchmark/benchmark.h>

#include <string>

#include "asprl/grid/domain.hpp"
#include "asprl/grid/map.hpp"
#include "asprl/lang/translate.hpp"
#include "asprl/mdp/enumerate.hpp"

using namespace asprl;

namespace {

grid::GridMap open_map(int n) {
  std::string text;
  for (int row = 0; row < n; ++row) {
    std::string line(static_cast<std::size_t>(n), '.');
    if (row == 0) line[static_cast<std::size_t>(n) - 1] = 'G';
    if (row == n - 1) line[0] = 'S';
    text += line;
    text += '\n';
  }
  return grid::load_map(text);
}

}  // namespace

static void BM_TranslateGrid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  lang::ActionDescription d = grid::as_action_description(open_map(n), {}, {});
  int m = 2 * (n - 1);
  for (auto _ : state) {
    asp::Program p = lang::translate(d, m);
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(std::to_string(n) + "x" + std::to_string(n) + " m=" + std::to_string(m));
}
BENCHMARK(BM_TranslateGrid)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_EnumerateMinimal(benchmark::State& state) {
  // full minimal-horizon enumeration: C(2(n-1), n-1) trajectories
  int n = static_cast<int>(state.range(0));
  lang::ActionDescription d = grid::as_action_description(open_map(n), {}, {});
  std::size_t found = 0;
  for (auto _ : state) {
    mdp::TrajectorySet ts = mdp::enumerate_trajectories(d, 4 * n, 0, 1000000);
    found = ts.trajectories.size();
    benchmark::DoNotOptimize(ts);
  }
  state.SetLabel(std::to_string(found) + " trajectories");
}
BENCHMARK(BM_EnumerateMinimal)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
