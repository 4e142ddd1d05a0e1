#include <benchmark/benchmark.h>

#include <string>

#include "asprl/grid/builtin_maps.hpp"
#include "asprl/grid/domain.hpp"
#include "asprl/grid/env.hpp"
#include "asprl/mdp/enumerate.hpp"
#include "asprl/mdp/qtable.hpp"
#include "asprl/mdp/reduced.hpp"
#include "asprl/rl/learning.hpp"
#include "asprl/rng.hpp"

using namespace asprl;

static void BM_RunEpisodeFallback(benchmark::State& state) {
  // unrestricted learning on the open 10x10 map, warmed to short episodes
  grid::GridEnv env(grid::builtin_map(1), grid::SlipModel{});
  mdp::ReducedMdp no_support;
  rl::LearningParams params;
  mdp::QTable q;
  Rng rng(1);
  for (int warm = 0; warm < 500; ++warm) {
    rl::run_episode(env, q, no_support, params, rl::Algo::q_learning, 2000, rng);
  }
  std::int64_t steps = 0;
  for (auto _ : state) {
    rl::EpisodeResult r =
        rl::run_episode(env, q, no_support, params, rl::Algo::q_learning, 2000, rng);
    steps += r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(steps);
}
BENCHMARK(BM_RunEpisodeFallback);

static void BM_RunEpisodeReduced(benchmark::State& state) {
  // support-restricted learning on a 6x6 open map (252 minimal trajectories)
  grid::GridMap map = grid::load_map(
      ".....G\n"
      "......\n"
      "......\n"
      "......\n"
      "......\n"
      "S.....\n");
  lang::ActionDescription d = grid::as_action_description(map, {}, {});
  mdp::TrajectorySet ts = mdp::enumerate_trajectories(d, 20, 0, 1000000);
  mdp::ReducedMdp support = mdp::build_reduced(ts, d);

  grid::GridEnv env(map, grid::SlipModel{});
  rl::LearningParams params;
  Rng rng(1);
  mdp::QTable q = mdp::merge_q(mdp::QTable{}, support, params.init, rng);
  for (int warm = 0; warm < 500; ++warm) {
    rl::run_episode(env, q, support, params, rl::Algo::sarsa, 2000, rng);
  }
  std::int64_t steps = 0;
  for (auto _ : state) {
    rl::EpisodeResult r = rl::run_episode(env, q, support, params, rl::Algo::sarsa, 2000, rng);
    steps += r.steps;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(steps);
}
BENCHMARK(BM_RunEpisodeReduced);

static void BM_MergeRekey(benchmark::State& state) {
  // the support swap the non-stationary arms pay at the change point
  grid::GridMap before = grid::builtin_map(4);
  lang::ActionDescription d = grid::as_action_description(before, before.walls, before.holes);
  mdp::TrajectorySet ts = mdp::enumerate_trajectories(d, 60, 0, 10);
  mdp::ReducedMdp support = mdp::build_reduced(ts, d);
  rl::LearningParams params;
  Rng rng(1);
  mdp::QTable q = mdp::merge_q(mdp::QTable{}, support, params.init, rng);
  for (auto _ : state) {
    mdp::QTable merged = mdp::merge_q(q, support, params.init, rng);
    benchmark::DoNotOptimize(merged);
  }
}
BENCHMARK(BM_MergeRekey);
