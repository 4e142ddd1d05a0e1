#ifndef ASPRL_MDP_VALUE_ITERATION_HPP
#define ASPRL_MDP_VALUE_ITERATION_HPP

#include <string>
#include <vector>

#include "asprl/errors.hpp"

namespace asprl::mdp {

class BadDistribution : public Error {
public:
    using Error::Error;
};

/// One possible result of taking an action: successor state index, its
/// probability, and the reward collected on the way.
struct Outcome {
    std::size_t next = 0;
    double probability = 0.0;
    double reward = 0.0;
};

/// A fully specified finite MDP for oracle computations. Terminal states
/// are absorbing with value 0; an empty outcome list means the action is
/// unavailable in that state.
struct ExplicitMdp {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    /// transitions[state][action] -> outcomes (empty = unavailable).
    std::vector<std::vector<std::vector<Outcome>>> transitions;
    std::vector<bool> terminal;

    std::size_t state_index(const std::string& name) const;
    std::size_t action_index(const std::string& name) const;
};

struct ValueIterationResult {
    std::vector<double> values;
    /// Greedy action index per state; -1 for terminal states and states
    /// without available actions. Ties resolve to the lowest action index.
    std::vector<int> policy;
    int sweeps = 0;
};

/// Standard value iteration from V = 0 until the Bellman residual drops
/// below `tolerance`. Validates that every available action's outcome
/// probabilities sum to 1 within 1e-9 (BadDistribution otherwise) and that
/// 0 <= gamma < 1.
ValueIterationResult value_iteration(const ExplicitMdp& mdp, double gamma, double tolerance);

/// Expected discounted value of following a fixed policy (action index per
/// state; -1 = no action, value 0), same validation and stopping rule.
std::vector<double> evaluate_policy(const ExplicitMdp& mdp, const std::vector<int>& policy,
                                    double gamma, double tolerance);

} // namespace asprl::mdp

#endif
