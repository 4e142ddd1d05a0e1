#ifndef ASPRL_GRID_ENV_HPP
#define ASPRL_GRID_ENV_HPP

#include <string>
#include <vector>

#include "asprl/grid/map.hpp"
#include "asprl/rl/learning.hpp"
#include "asprl/rng.hpp"

namespace asprl::grid {

class InvalidState : public Error {
public:
    using Error::Error;
};

class InvalidAction : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Slip execution model: the intended direction happens with p_intended,
/// each orthogonal with p_orthogonal_each; the reverse never happens.
struct SlipModel {
    double p_intended = 0.8;
    double p_orthogonal_each = 0.1;

    void validate() const;
};

enum class Cause { goal, hole, move, wall_bump };

struct StepOutcome {
    Cell next_state;
    double reward = 0.0;
    bool terminal = false;
    Cause cause = Cause::move;
};

/// Moves one cell in an already-resolved direction: off-grid or wall
/// targets bump (stay, -1), holes terminate with -100, the goal terminates
/// with +100, anything else moves with -1.
StepOutcome apply_direction(const GridMap& map, Cell s, Action direction);

/// Samples the actual direction from the slip model, then applies it.
StepOutcome step(const GridMap& map, const SlipModel& slip, Cell s, Action a, Rng& rng);

/// "at=(x,y)" — the state naming shared with the action-language encoding.
std::string cell_state(Cell c);
Cell parse_cell_state(const std::string& name);

/// The gridworld as an rl::Environment: episodic slip-world over a GridMap
/// that can be swapped mid-run (the non-stationary part).
class GridEnv : public rl::Environment {
public:
    GridEnv(GridMap map, SlipModel slip);

    std::string reset() override;
    rl::StepResult step(const std::string& action, Rng& rng) override;
    const std::vector<std::string>& action_names() const override;

    /// Replaces the map for subsequent episodes. The new map must have the
    /// same dimensions, start and goal; an in-flight episode is abandoned
    /// (callers report it as a step_limit cut-off).
    void switch_map(const GridMap& new_map);

    bool episode_active() const { return episode_active_; }
    const GridMap& map() const { return map_; }
    const SlipModel& slip() const { return slip_; }

private:
    GridMap map_;
    SlipModel slip_;
    std::vector<std::string> action_names_;
    Cell position_{};
    bool episode_active_ = false;
};

} // namespace asprl::grid

#endif
