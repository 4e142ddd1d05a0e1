#ifndef ASPRL_GRID_ORACLE_HPP
#define ASPRL_GRID_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "asprl/grid/env.hpp"
#include "asprl/grid/map.hpp"
#include "asprl/mdp/reduced.hpp"
#include "asprl/mdp/value_iteration.hpp"

namespace asprl::grid {

/// The true environment dynamics as an explicit MDP: states are the free
/// cells plus holes and the goal (terminal), transitions follow the slip
/// model with rewards as the environment pays them.
mdp::ExplicitMdp build_explicit_mdp(const GridMap& map, const SlipModel& slip);

/// The same dynamics restricted to a reduced MDP's support: only its
/// states and its allowed (state, action) pairs, terminals included for
/// free. Throws Error when a slip outcome of an allowed pair leaves the
/// support (the support is not closed, so the restriction is ill-defined).
mdp::ExplicitMdp restrict_explicit(const GridMap& map, const SlipModel& slip,
                                   const mdp::ReducedMdp& reduced);

/// BFS step counts over free cells (4-neighborhood), indexed y*width + x;
/// -1 where unreachable (walls, holes, separated regions).
std::vector<int> bfs_distances(const GridMap& map, Cell from);

/// Whether the goal is reachable from the start through free cells.
bool feasible(const GridMap& map);

/// BFS start-to-goal distance; -1 when infeasible. Equals the minimal plan
/// horizon of the fully-known map's action description.
int shortest_path_steps(const GridMap& map);

/// Number of action sequences of exactly `length` steps whose expected
/// (deterministic) execution on the fully-known map runs start -> goal:
/// blocked moves stay in place and count, moves into holes are impossible.
/// This mirrors the bounded-horizon encoding, making it an independent
/// oracle for trajectory counts. Saturates at `cap`.
std::uint64_t count_walks(const GridMap& map, int length, std::uint64_t cap);

/// Sum of count_walks over lengths m_lo..m_hi, saturating at `cap`.
std::uint64_t count_walks_range(const GridMap& map, int m_lo, int m_hi, std::uint64_t cap);

struct PolicySimulation {
    double mean_steps = 0.0;
    double mean_return = 0.0;
    int episodes = 0;
};

/// Monte-Carlo rollout of a fixed policy from the start cell; episodes cut
/// off at step_limit count with their accumulated return.
PolicySimulation simulate_policy(const GridMap& map, const SlipModel& slip,
                                 const std::function<Action(Cell)>& policy, int episodes,
                                 int step_limit, Rng& rng);

} // namespace asprl::grid

#endif
