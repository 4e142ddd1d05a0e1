#include "asprl/exp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "asprl/grid/domain.hpp"
#include "asprl/grid/env.hpp"
#include "asprl/grid/oracle.hpp"
#include "asprl/mdp/enumerate.hpp"
#include "asprl/mdp/reduced.hpp"
#include "asprl/mdp/value_iteration.hpp"

namespace asprl::exp {

namespace {

constexpr std::uint64_t dual_walk_budget = 20000;
constexpr int dual_slack = 2;
constexpr std::uint64_t theorem_walk_budget = 50000;
constexpr double vi_gamma = 0.9;
constexpr double vi_tolerance = 1e-10;

struct Distances {
    std::vector<int> from_start;
    std::vector<int> to_goal;
};

Distances distances(const grid::GridMap& map) {
    return {grid::bfs_distances(map, map.start), grid::bfs_distances(map, map.goal)};
}

std::size_t index_of(const grid::GridMap& map, grid::Cell c) {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(map.width) +
           static_cast<std::size_t>(c.x);
}

/// On the way from start to goal: reachable from the start and able to
/// reach the goal.
bool live(const grid::GridMap& map, const Distances& d, grid::Cell c) {
    std::size_t i = index_of(map, c);
    return d.from_start[i] >= 0 && d.to_goal[i] >= 0;
}

/// Every free cell the agent can reach can still reach the goal. Without
/// this, a slip can push the expected-execution support out of itself and
/// the restricted oracle MDP is not well defined.
bool pocket_free(const grid::GridMap& map, const Distances& d) {
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            grid::Cell c{x, y};
            std::size_t i = index_of(map, c);
            if (map.is_free(c) && d.from_start[i] >= 0 && d.to_goal[i] < 0) {
                return false;
            }
        }
    }
    return true;
}

/// The smallest horizon H such that every pair (s, a) with s on a live
/// path and an expected outcome that stays on one appears in some plan of
/// length <= H: route shortest to s, take the move, route shortest home.
int coverage_horizon(const grid::GridMap& map, const Distances& d) {
    int h = 0;
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            grid::Cell s{x, y};
            if (!map.is_free(s) || !live(map, d, s) || s == map.goal) {
                continue;
            }
            for (grid::Action a : grid::all_actions) {
                grid::StepOutcome out = grid::apply_direction(map, s, a);
                if (out.cause == grid::Cause::hole) {
                    continue;
                }
                if (!live(map, d, out.next_state)) {
                    continue;
                }
                int len = d.from_start[index_of(map, s)] + 1 +
                          d.to_goal[index_of(map, out.next_state)];
                h = std::max(h, len);
            }
        }
    }
    return h;
}

/// Whether the optimal policy of the full MDP ever intends a move into a
/// known hole at some live state. Such a move can never appear in a plan,
/// so no amount of extra horizon would put it into the reduced support.
bool optimal_enters_hole(const grid::GridMap& map, const mdp::ExplicitMdp& full,
                         const mdp::ValueIterationResult& vi, const Distances& d) {
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            grid::Cell s{x, y};
            if (!map.is_free(s) || !live(map, d, s) || s == map.goal) {
                continue;
            }
            int pa = vi.policy[full.state_index(grid::cell_state(s))];
            if (pa < 0) {
                continue;
            }
            grid::Action a = *grid::parse_action(full.actions[static_cast<std::size_t>(pa)]);
            if (grid::apply_direction(map, s, a).cause == grid::Cause::hole) {
                return true;
            }
        }
    }
    return false;
}

void shuffle_indices(std::vector<std::size_t>& idx, Rng& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::swap(idx[i - 1], idx[rng.next_index(i)]);
    }
}

CheckResult fail(const std::string& detail) {
    return {false, detail};
}

std::string describe(const grid::GridMap& map) {
    std::ostringstream os;
    os << map.width << "x" << map.height << ", " << map.walls.size() << " walls, "
       << map.holes.size() << " holes";
    return os.str();
}

/// Action value of (state, action index) under `values`, mirroring the
/// value-iteration backup (terminal successors contribute no continuation).
double q_value(const mdp::ExplicitMdp& m, const std::vector<double>& values, std::size_t si,
               std::size_t ai, double gamma) {
    double q = 0.0;
    for (const mdp::Outcome& out : m.transitions[si][ai]) {
        double cont = m.terminal[out.next] ? 0.0 : values[out.next];
        q += out.probability * (out.reward + gamma * cont);
    }
    return q;
}

} // namespace

grid::GridMap random_check_map(Rng& rng, bool for_theorem) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        grid::GridMap map;
        map.width = 2 + static_cast<int>(rng.next_index(3));
        map.height = 2 + static_cast<int>(rng.next_index(3));
        std::size_t cells = static_cast<std::size_t>(map.width * map.height);

        std::size_t walls = rng.next_index(4);
        std::size_t holes = rng.next_index(3);
        if (walls + holes + 2 > cells) {
            continue;
        }
        std::vector<std::size_t> idx(cells);
        std::iota(idx.begin(), idx.end(), 0);
        shuffle_indices(idx, rng);
        auto cell_at = [&](std::size_t i) {
            return grid::Cell{static_cast<int>(idx[i] % static_cast<std::size_t>(map.width)),
                              static_cast<int>(idx[i] / static_cast<std::size_t>(map.width))};
        };
        std::size_t used = 0;
        for (std::size_t i = 0; i < walls; ++i) {
            map.walls.insert(cell_at(used++));
        }
        for (std::size_t i = 0; i < holes; ++i) {
            map.holes.insert(cell_at(used++));
        }
        map.start = cell_at(used++);
        map.goal = cell_at(used++);
        map.validate();

        if (!grid::feasible(map)) {
            continue;
        }
        int m_star = grid::shortest_path_steps(map);
        if (for_theorem) {
            Distances d = distances(map);
            if (!pocket_free(map, d)) {
                continue;
            }
            int h = coverage_horizon(map, d);
            if (grid::count_walks_range(map, m_star, h, theorem_walk_budget + 1) >
                theorem_walk_budget) {
                continue;
            }
            mdp::ExplicitMdp full = grid::build_explicit_mdp(map, grid::SlipModel{});
            mdp::ValueIterationResult vi = mdp::value_iteration(full, vi_gamma, vi_tolerance);
            if (optimal_enters_hole(map, full, vi, d)) {
                continue;
            }
        } else {
            if (grid::count_walks_range(map, m_star, m_star + dual_slack, dual_walk_budget + 1) >
                dual_walk_budget) {
                continue;
            }
        }
        return map;
    }
    throw Error("random_check_map: no acceptable map in 100000 attempts");
}

CheckResult check_dual_construction(const grid::GridMap& map) {
    try {
        lang::ActionDescription d = grid::as_action_description(map, map.walls, map.holes);
        mdp::TrajectorySet h =
            mdp::enumerate_trajectories(d, 64, dual_slack, dual_walk_budget + 1);
        if (h.capped) {
            return fail("enumeration hit the model cap");
        }
        if (h.m_star != grid::shortest_path_steps(map)) {
            return fail("minimal horizon disagrees with the BFS distance");
        }

        mdp::ReducedMdp a = mdp::build_reduced(h, d);
        mdp::ReducedMdp b = mdp::build_reduced_subtractive(h, d);
        if (a.states != b.states || a.actions != b.actions ||
            a.initial_states != b.initial_states || a.goal_states != b.goal_states) {
            return fail("union and subtractive constructions disagree on sets");
        }
        if (a.allowed != b.allowed) {
            return fail("union and subtractive constructions disagree on transitions");
        }

        for (const std::string& s : a.states) {
            if (!map.is_free(grid::parse_cell_state(s))) {
                return fail("state outside the free cells: " + s);
            }
        }
        for (const std::string& name : a.actions) {
            if (!grid::parse_action(name)) {
                return fail("unknown action: " + name);
            }
        }
        if (a.initial_states != std::vector<std::string>{grid::cell_state(map.start)}) {
            return fail("initial states are not exactly the start cell");
        }
        if (a.goal_states != std::vector<std::string>{grid::cell_state(map.goal)}) {
            return fail("goal states are not exactly the goal cell");
        }

        std::uint64_t walks =
            grid::count_walks_range(map, h.m_star, h.horizon_used, dual_walk_budget + 1);
        if (walks != h.trajectories.size()) {
            std::ostringstream os;
            os << "trajectory count " << h.trajectories.size() << " != walk count " << walks;
            return fail(os.str());
        }
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_theorem1(const grid::GridMap& map) {
    try {
        Distances dist = distances(map);
        int h = coverage_horizon(map, dist);
        int slack = h - grid::shortest_path_steps(map);

        lang::ActionDescription d = grid::as_action_description(map, map.walls, map.holes);
        mdp::TrajectorySet ts = mdp::enumerate_trajectories(d, h, slack, theorem_walk_budget + 1);
        if (ts.capped) {
            return fail("enumeration hit the model cap");
        }
        int slack_used = ts.horizon_used - ts.m_star;
        if (ts.horizon_used != h) {
            std::ostringstream os;
            os << "expected horizons up to " << h << ", enumerated up to " << ts.horizon_used
               << " (slack " << slack_used << ")";
            return fail(os.str());
        }
        mdp::ReducedMdp reduced = mdp::build_reduced(ts, d);

        // With dead ends excluded, the support must be exactly the live
        // cells; anything else means the coverage horizon was wrong.
        std::vector<std::string> live_states;
        for (int y = 0; y < map.height; ++y) {
            for (int x = 0; x < map.width; ++x) {
                grid::Cell c{x, y};
                if (map.is_free(c) && live(map, dist, c)) {
                    live_states.push_back(grid::cell_state(c));
                }
            }
        }
        std::sort(live_states.begin(), live_states.end());
        if (reduced.states != live_states) {
            return fail("support states are not exactly the live cells");
        }
        for (const auto& [pair, next] : reduced.allowed) {
            grid::Cell s = grid::parse_cell_state(pair.first);
            grid::Action a = *grid::parse_action(pair.second);
            if (grid::apply_direction(map, s, a).cause == grid::Cause::hole) {
                return fail("allowed pair steps into a known hole");
            }
        }

        grid::SlipModel slip;
        mdp::ExplicitMdp full = grid::build_explicit_mdp(map, slip);
        mdp::ExplicitMdp restricted = grid::restrict_explicit(map, slip, reduced);
        mdp::ValueIterationResult vi_full = mdp::value_iteration(full, vi_gamma, vi_tolerance);
        mdp::ValueIterationResult vi_restricted =
            mdp::value_iteration(restricted, vi_gamma, vi_tolerance);

        std::string start = grid::cell_state(map.start);
        double v_full = vi_full.values[full.state_index(start)];
        double v_restricted = vi_restricted.values[restricted.state_index(start)];
        if (std::abs(v_full - v_restricted) > 1e-6) {
            std::ostringstream os;
            os << "start values differ: full " << v_full << " vs restricted " << v_restricted;
            return fail(os.str());
        }

        // Walk the unrestricted greedy policy along its expected path; at
        // every visited state its action must be allowed and must still be
        // greedy for the restricted problem.
        grid::Cell c = map.start;
        std::set<grid::Cell> visited;
        while (!(c == map.goal)) {
            if (!visited.insert(c).second) {
                break;
            }
            std::string s = grid::cell_state(c);
            int pa = vi_full.policy[full.state_index(s)];
            if (pa < 0) {
                return fail("full policy has no action at " + s);
            }
            const std::string& aname = full.actions[static_cast<std::size_t>(pa)];
            if (reduced.allowed.find({s, aname}) == reduced.allowed.end()) {
                return fail("greedy action " + aname + " at " + s + " is not in the support");
            }
            std::size_t si = restricted.state_index(s);
            double best = 0.0;
            double chosen = 0.0;
            bool any = false;
            for (std::size_t ai = 0; ai < restricted.actions.size(); ++ai) {
                if (restricted.transitions[si][ai].empty()) {
                    continue;
                }
                double q = q_value(restricted, vi_restricted.values, si, ai, vi_gamma);
                if (!any || q > best) {
                    best = q;
                }
                any = true;
                if (restricted.actions[ai] == aname) {
                    chosen = q;
                }
            }
            if (!any || chosen < best - 1e-6) {
                return fail("greedy action " + aname + " at " + s +
                            " is not greedy under the restriction");
            }
            c = grid::apply_direction(map, c, *grid::parse_action(aname)).next_state;
        }
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

bool run_verify(int dual_maps, int theorem_maps, std::uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    bool all_ok = true;
    for (int i = 0; i < dual_maps; ++i) {
        grid::GridMap map = random_check_map(rng, false);
        CheckResult r = check_dual_construction(map);
        out << (r.ok ? "pass" : "FAIL") << "  dual-construction " << (i + 1) << "/" << dual_maps
            << "  (" << describe(map) << ")";
        if (!r.ok) {
            out << ": " << r.detail;
        }
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    for (int i = 0; i < theorem_maps; ++i) {
        grid::GridMap map = random_check_map(rng, true);
        CheckResult r = check_theorem1(map);
        out << (r.ok ? "pass" : "FAIL") << "  value-equivalence " << (i + 1) << "/"
            << theorem_maps << "  (" << describe(map) << ")";
        if (!r.ok) {
            out << ": " << r.detail;
        }
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    out << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok;
}

} // namespace asprl::exp
