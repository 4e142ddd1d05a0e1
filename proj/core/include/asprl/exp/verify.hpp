#ifndef ASPRL_EXP_VERIFY_HPP
#define ASPRL_EXP_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "asprl/grid/map.hpp"
#include "asprl/rng.hpp"

namespace asprl::exp {

struct CheckResult {
    bool ok = true;
    std::string detail;
};

/// Draws a small random map (2..4 cells per side, up to 3 walls and 2
/// holes, start and goal free and distinct), filtered so the downstream
/// checks stay cheap: the goal must be reachable and the number of plan
/// walks over the checked horizon range must be modest. With `for_theorem`
/// the map additionally has no reachable dead ends and an optimal policy
/// that never steps into a known hole on purpose; both are needed for the
/// value-equivalence claim to apply.
grid::GridMap random_check_map(Rng& rng, bool for_theorem);

/// Enumerates the fully-known map and builds the reduced MDP both ways
/// (union and subtractive), then cross-checks: the two constructions agree
/// exactly, states are free cells of the map, actions are the four moves,
/// the trajectory count matches the independent walk-count oracle, and the
/// minimal horizon matches the BFS distance.
CheckResult check_dual_construction(const grid::GridMap& map);

/// Enumerates with enough extra horizon to cover every useful transition,
/// then compares value iteration on the environment MDP against the same
/// computation restricted to the reduced support: start values must agree
/// to 1e-6 and the unrestricted greedy policy must stay inside the support
/// (and stay greedy there) along its expected path.
CheckResult check_theorem1(const grid::GridMap& map);

/// Runs `dual_maps` + `theorem_maps` random checks, printing one line per
/// map; returns whether everything passed.
bool run_verify(int dual_maps, int theorem_maps, std::uint64_t seed, std::ostream& out);

} // namespace asprl::exp

#endif
