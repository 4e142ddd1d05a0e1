#ifndef ASPRL_RL_LEARNING_HPP
#define ASPRL_RL_LEARNING_HPP

#include <optional>
#include <string>
#include <vector>

#include "asprl/mdp/qtable.hpp"
#include "asprl/mdp/reduced.hpp"
#include "asprl/rng.hpp"

namespace asprl::rl {

class NoAvailableActions : public Error {
public:
    using Error::Error;
};

enum class TerminalCause { none, goal, hole, step_limit };

const char* terminal_cause_name(TerminalCause cause);

struct StepResult {
    std::string state;
    double reward = 0.0;
    bool terminal = false;
    TerminalCause cause = TerminalCause::none;
};

/// The environment surface rl_core consumes: episodic, string-named states
/// and actions, sampling driven by a caller-owned rng.
class Environment {
public:
    virtual ~Environment() = default;

    /// Starts a new episode; returns the initial state.
    virtual std::string reset() = 0;
    virtual StepResult step(const std::string& action, Rng& rng) = 0;
    /// Every action of the domain, used as the fallback action set for
    /// states outside the reduced support.
    virtual const std::vector<std::string>& action_names() const = 0;
};

struct LearningParams {
    double alpha = 0.2;
    double gamma = 0.9;
    double epsilon = 0.1;
    mdp::QInit init = mdp::QInit::uniform(0.0, 0.1);

    /// alpha in (0,1], gamma in [0,1), epsilon in [0,1].
    void validate() const;
};

enum class Algo { q_learning, sarsa };

struct EpisodeResult {
    int steps = 0;
    double return_ = 0.0;
    TerminalCause terminal = TerminalCause::none;
};

/// With probability epsilon a uniformly random available action, otherwise
/// an argmax of q over `available` with ties broken uniformly. epsilon = 0
/// draws nothing, and a unique argmax draws nothing, so greedy runs are
/// rng-silent. Unkeyed pairs read as value 0.
const std::string& epsilon_greedy(const mdp::QTable& q, const std::string& s,
                                  const std::vector<std::string>& available, double epsilon,
                                  Rng& rng);

/// Watkins update: q(s,a) += alpha * (r + gamma * max_{a'} q(s_next, a') - q(s,a)),
/// the max running over `available_next` (empty = terminal, bootstrap 0).
/// A missing (s,a) is added first with the params' fallback init.
void q_learning_update(mdp::QTable& q, const std::string& s, const std::string& a, double r,
                       const std::string& s_next, const std::vector<std::string>& available_next,
                       const LearningParams& params);

/// On-policy update bootstrapping from the selected next action;
/// a_next = nullopt means the transition was terminal (bootstrap 0).
void sarsa_update(mdp::QTable& q, const std::string& s, const std::string& a, double r,
                  const std::string& s_next, const std::optional<std::string>& a_next,
                  const LearningParams& params);

/// Runs one episode to termination or step_limit, updating q in place after
/// every environment step. Action sets come from the reduced MDP; states
/// outside it fall back to all domain actions, and their pairs are keyed
/// lazily with drawn init values. Both algorithms select the next action
/// right after observing the next state (before the update), which makes
/// their rng streams align; the episode cut off at step_limit still applies
/// a normal bootstrapped update.
EpisodeResult run_episode(Environment& env, mdp::QTable& q, const mdp::ReducedMdp& mdp,
                          const LearningParams& params, Algo algo, int step_limit, Rng& rng);

} // namespace asprl::rl

#endif
