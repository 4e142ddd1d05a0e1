#ifndef ASPRL_MDP_REDUCED_HPP
#define ASPRL_MDP_REDUCED_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asprl/lang/domain.hpp"
#include "asprl/mdp/trajectory.hpp"

namespace asprl::mdp {

class EmptyTrajectorySet : public Error {
public:
    using Error::Error;
};

/// The reduced MDP: only the states, actions and transitions that occur in
/// a trajectory set. Rewards are deliberately absent (they come from the
/// environment at interaction time).
struct ReducedMdp {
    std::vector<std::string> states;         // sorted, unique
    std::vector<std::string> actions;        // sorted, unique
    std::vector<std::string> initial_states; // sorted, unique
    std::vector<std::string> goal_states;    // sorted, unique
    /// (s, a) -> possible next states (sorted). Key presence is what
    /// "allowed" means; the next-state sets carry the transition structure.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> allowed;

    /// Allowed actions per state, derived from `allowed` by rebuild_index().
    std::map<std::string, std::vector<std::string>> actions_by_state;

    bool has_state(const std::string& s) const;
    /// Actions allowed at s, or nullptr when s has none (unknown state or
    /// state that only ever ends trajectories).
    const std::vector<std::string>* actions_at(const std::string& s) const;
    const std::vector<std::string>* next_states(const std::string& s, const std::string& a) const;
    std::size_t pair_count() const { return allowed.size(); }

    void rebuild_index();
};

/// Union construction: S~, A~, T~ are exactly what occurs in `h`.
ReducedMdp build_reduced(const TrajectorySet& h, const lang::ActionDescription& d);

/// Subtractive construction: starts from S~ x A~ (drawn from `h`), removes
/// pairs that occur in no trajectory, and fills the next-state sets from
/// the action description's own transition relation, dropping successors
/// outside S~. Agrees with build_reduced whenever `d` is deterministic
/// (which grid descriptions are); tests assert that agreement.
ReducedMdp build_reduced_subtractive(const TrajectorySet& h, const lang::ActionDescription& d);

/// Versioned plain-text round-trip, for golden files and checkpoints.
std::string serialize_reduced(const ReducedMdp& mdp);
ReducedMdp parse_reduced(const std::string& text);

} // namespace asprl::mdp

#endif
