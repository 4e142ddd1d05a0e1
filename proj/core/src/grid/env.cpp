#include "asprl/grid/env.hpp"

#include <cmath>
#include <cstdio>

namespace asprl::grid {

void SlipModel::validate() const {
    if (!(p_intended >= 0.0 && p_orthogonal_each >= 0.0)) {
        throw Error("slip probabilities must be non-negative");
    }
    if (std::abs(p_intended + 2.0 * p_orthogonal_each - 1.0) > 1e-12) {
        throw Error("slip probabilities must satisfy p_intended + 2*p_orthogonal_each = 1");
    }
}

StepOutcome apply_direction(const GridMap& map, Cell s, Action direction) {
    Cell d = delta(direction);
    Cell target{s.x + d.x, s.y + d.y};
    if (!map.in_bounds(target) || map.is_wall(target)) {
        return {s, -1.0, false, Cause::wall_bump};
    }
    if (map.is_hole(target)) {
        return {target, -100.0, true, Cause::hole};
    }
    if (target == map.goal) {
        return {target, 100.0, true, Cause::goal};
    }
    return {target, -1.0, false, Cause::move};
}

StepOutcome step(const GridMap& map, const SlipModel& slip, Cell s, Action a, Rng& rng) {
    if (!map.is_free(s)) {
        throw InvalidState("cell " + cell_state(s) + " is not a free cell");
    }
    slip.validate();
    double u = rng.next_double();
    Action actual = a;
    std::array<Action, 2> sides = orthogonals(a);
    if (u >= slip.p_intended) {
        actual = u < slip.p_intended + slip.p_orthogonal_each ? sides[0] : sides[1];
    }
    return apply_direction(map, s, actual);
}

std::string cell_state(Cell c) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "at=(%d,%d)", c.x, c.y);
    return buffer;
}

Cell parse_cell_state(const std::string& name) {
    Cell c;
    int consumed = 0;
    if (std::sscanf(name.c_str(), "at=(%d,%d)%n", &c.x, &c.y, &consumed) != 2 ||
        consumed != static_cast<int>(name.size())) {
        throw InvalidState("not a grid state: '" + name + "'");
    }
    return c;
}

GridEnv::GridEnv(GridMap map, SlipModel slip) : map_(std::move(map)), slip_(slip) {
    map_.validate();
    slip_.validate();
    for (Action a : all_actions) {
        action_names_.push_back(action_name(a));
    }
}

std::string GridEnv::reset() {
    position_ = map_.start;
    episode_active_ = true;
    return cell_state(position_);
}

rl::StepResult GridEnv::step(const std::string& action, Rng& rng) {
    if (!episode_active_) {
        throw InvalidState("step without an active episode (reset first)");
    }
    std::optional<Action> a = parse_action(action);
    if (!a) {
        throw InvalidAction("unknown action '" + action + "'");
    }
    StepOutcome out = grid::step(map_, slip_, position_, *a, rng);
    position_ = out.next_state;
    rl::StepResult result;
    result.state = cell_state(out.next_state);
    result.reward = out.reward;
    result.terminal = out.terminal;
    if (out.terminal) {
        episode_active_ = false;
        result.cause = out.cause == Cause::goal ? rl::TerminalCause::goal : rl::TerminalCause::hole;
    }
    return result;
}

const std::vector<std::string>& GridEnv::action_names() const { return action_names_; }

void GridEnv::switch_map(const GridMap& new_map) {
    new_map.validate();
    if (new_map.width != map_.width || new_map.height != map_.height) {
        throw DimensionMismatch("maps differ in size");
    }
    if (new_map.start != map_.start || new_map.goal != map_.goal) {
        throw DimensionMismatch("maps differ in start/goal");
    }
    map_ = new_map;
    episode_active_ = false;
}

} // namespace asprl::grid
