#ifndef ASPRL_MDP_TRAJECTORY_HPP
#define ASPRL_MDP_TRAJECTORY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "asprl/errors.hpp"
#include "asprl/symbols.hpp"

namespace asprl::mdp {

/// Shared interning tables for trajectory state and action names. One Vocab
/// is shared by all trajectories of a TrajectorySet, which keeps large
/// enumerations compact (a trajectory stores ids, not strings).
struct Vocab {
    SymbolTable states;
    SymbolTable actions;
};

/// A chained sequence of triples (s_0,a_0,s_1), ..., (s_{n-1},a_{n-1},s_n);
/// stored as n+1 state ids and n action ids over a shared Vocab.
struct Trajectory {
    std::shared_ptr<const Vocab> vocab;
    std::vector<std::uint32_t> state_ids;
    std::vector<std::uint32_t> action_ids;

    /// Number of triples.
    std::size_t length() const { return action_ids.size(); }

    const std::string& state(std::size_t i) const { return vocab->states.name(state_ids.at(i)); }
    const std::string& action(std::size_t i) const {
        return vocab->actions.name(action_ids.at(i));
    }
};

struct TrajectorySet {
    std::shared_ptr<Vocab> vocab;
    std::vector<Trajectory> trajectories;
    /// Minimal horizon at which the goal was reachable.
    int m_star = 0;
    /// Last horizon actually enumerated (m_star + slack, clamped and
    /// possibly cut short by the model cap).
    int horizon_used = 0;
    /// True when enumeration stopped at the model cap.
    bool capped = false;

    bool empty() const { return trajectories.empty(); }
};

} // namespace asprl::mdp

#endif
