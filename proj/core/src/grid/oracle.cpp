#include "asprl/grid/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace asprl::grid {

namespace {

std::size_t index_of(const GridMap& map, Cell c) {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(map.width) +
           static_cast<std::size_t>(c.x);
}

/// The three slip branches of an intended action, with probabilities.
struct Branch {
    Action direction;
    double probability;
};

std::array<Branch, 3> branches(const SlipModel& slip, Action a) {
    std::array<Action, 2> sides = orthogonals(a);
    return {Branch{a, slip.p_intended}, Branch{sides[0], slip.p_orthogonal_each},
            Branch{sides[1], slip.p_orthogonal_each}};
}

} // namespace

mdp::ExplicitMdp build_explicit_mdp(const GridMap& map, const SlipModel& slip) {
    map.validate();
    slip.validate();

    mdp::ExplicitMdp out;
    std::map<Cell, std::size_t> index;
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            Cell c{x, y};
            if (map.is_wall(c)) {
                continue;
            }
            index[c] = out.states.size();
            out.states.push_back(cell_state(c));
            out.terminal.push_back(map.is_hole(c) || c == map.goal);
        }
    }
    for (Action a : all_actions) {
        out.actions.push_back(action_name(a));
    }

    out.transitions.assign(out.states.size(), {});
    for (const auto& [cell, s] : index) {
        out.transitions[s].assign(out.actions.size(), {});
        if (out.terminal[s]) {
            continue;
        }
        for (Action a : all_actions) {
            std::vector<mdp::Outcome>& outcomes = out.transitions[s][static_cast<std::size_t>(a)];
            for (const Branch& branch : branches(slip, a)) {
                StepOutcome step = apply_direction(map, cell, branch.direction);
                outcomes.push_back({index.at(step.next_state), branch.probability, step.reward});
            }
        }
    }
    return out;
}

mdp::ExplicitMdp restrict_explicit(const GridMap& map, const SlipModel& slip,
                                   const mdp::ReducedMdp& reduced) {
    map.validate();
    slip.validate();

    mdp::ExplicitMdp out;
    std::map<Cell, std::size_t> index;
    auto add_state = [&](Cell c, bool terminal) {
        auto [it, inserted] = index.try_emplace(c, out.states.size());
        if (inserted) {
            out.states.push_back(cell_state(c));
            out.terminal.push_back(terminal);
        }
        return it->second;
    };
    for (const std::string& name : reduced.states) {
        Cell c = parse_cell_state(name);
        add_state(c, c == map.goal);
    }
    // Slip can always end an episode in a hole; terminals are part of the
    // restriction for free.
    for (Cell hole : map.holes) {
        add_state(hole, true);
    }
    out.actions = reduced.actions;

    out.transitions.assign(out.states.size(), {});
    for (std::size_t s = 0; s < out.states.size(); ++s) {
        out.transitions[s].assign(out.actions.size(), {});
    }
    for (const auto& [pair, next] : reduced.allowed) {
        Cell cell = parse_cell_state(pair.first);
        if (cell == map.goal) {
            continue;
        }
        std::size_t s = index.at(cell);
        std::optional<Action> a = parse_action(pair.second);
        if (!a) {
            throw Error("reduced action '" + pair.second + "' is not a grid action");
        }
        std::size_t ai = out.action_index(pair.second);
        std::vector<mdp::Outcome>& outcomes = out.transitions[s][ai];
        for (const Branch& branch : branches(slip, *a)) {
            StepOutcome step = apply_direction(map, cell, branch.direction);
            auto it = index.find(step.next_state);
            if (it == index.end()) {
                throw Error("reduced support is not closed under slip: " + pair.first + " --" +
                            pair.second + "--> " + cell_state(step.next_state));
            }
            outcomes.push_back({it->second, branch.probability, step.reward});
        }
    }
    return out;
}

std::vector<int> bfs_distances(const GridMap& map, Cell from) {
    std::vector<int> dist(static_cast<std::size_t>(map.width) * map.height, -1);
    if (!map.is_free(from)) {
        return dist;
    }
    std::deque<Cell> queue{from};
    dist[index_of(map, from)] = 0;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        int base = dist[index_of(map, c)];
        for (Action a : all_actions) {
            Cell d = delta(a);
            Cell next{c.x + d.x, c.y + d.y};
            if (!map.is_free(next) || dist[index_of(map, next)] != -1) {
                continue;
            }
            dist[index_of(map, next)] = base + 1;
            queue.push_back(next);
        }
    }
    return dist;
}

bool feasible(const GridMap& map) { return shortest_path_steps(map) >= 0; }

int shortest_path_steps(const GridMap& map) {
    return bfs_distances(map, map.start)[index_of(map, map.goal)];
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a >= cap || b >= cap || a + b >= cap) {
        return cap;
    }
    return a + b;
}

} // namespace

std::uint64_t count_walks(const GridMap& map, int length, std::uint64_t cap) {
    return count_walks_range(map, length, length, cap);
}

std::uint64_t count_walks_range(const GridMap& map, int m_lo, int m_hi, std::uint64_t cap) {
    map.validate();
    if (m_lo < 1 || m_hi < m_lo) {
        throw Error("bad walk length range");
    }
    std::size_t cells = static_cast<std::size_t>(map.width) * map.height;
    std::vector<std::uint64_t> counts(cells, 0);
    counts[index_of(map, map.start)] = 1;
    std::uint64_t total = 0;
    for (int step = 1; step <= m_hi; ++step) {
        std::vector<std::uint64_t> next(cells, 0);
        for (int y = 0; y < map.height; ++y) {
            for (int x = 0; x < map.width; ++x) {
                Cell c{x, y};
                std::uint64_t n = counts[index_of(map, c)];
                if (n == 0 || !map.is_free(c)) {
                    continue;
                }
                for (Action a : all_actions) {
                    Cell d = delta(a);
                    Cell target{c.x + d.x, c.y + d.y};
                    if (!map.in_bounds(target) || map.is_wall(target)) {
                        target = c; // bump still counts as a step
                    } else if (map.is_hole(target)) {
                        continue; // the model forbids stepping into known holes
                    }
                    std::uint64_t& slot = next[index_of(map, target)];
                    slot = saturating_add(slot, n, cap);
                }
            }
        }
        counts = std::move(next);
        if (step >= m_lo) {
            total = saturating_add(total, counts[index_of(map, map.goal)], cap);
        }
    }
    return total;
}

PolicySimulation simulate_policy(const GridMap& map, const SlipModel& slip,
                                 const std::function<Action(Cell)>& policy, int episodes,
                                 int step_limit, Rng& rng) {
    map.validate();
    slip.validate();
    PolicySimulation result;
    result.episodes = episodes;
    for (int e = 0; e < episodes; ++e) {
        Cell at = map.start;
        int steps = 0;
        double ret = 0.0;
        while (steps < step_limit) {
            StepOutcome out = step(map, slip, at, policy(at), rng);
            ++steps;
            ret += out.reward;
            if (out.terminal) {
                break;
            }
            at = out.next_state;
        }
        result.mean_steps += steps;
        result.mean_return += ret;
    }
    if (episodes > 0) {
        result.mean_steps /= episodes;
        result.mean_return /= episodes;
    }
    return result;
}

} // namespace asprl::grid
