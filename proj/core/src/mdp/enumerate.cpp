#include "asprl/mdp/enumerate.hpp"

#include <algorithm>
#include <string>

#include "asprl/asp/solver.hpp"

namespace asprl::mdp {

namespace {

bool feasible_at(const lang::ActionDescription& d, int m) {
    return !asp::solve(lang::translate(d, m), 1).empty();
}

} // namespace

int find_min_horizon(const lang::ActionDescription& d, int max_horizon) {
    if (max_horizon < 1) {
        throw lang::HorizonInvalid("max_horizon must be at least 1, got " +
                                   std::to_string(max_horizon));
    }
    for (int m = 1; m <= max_horizon; ++m) {
        if (feasible_at(d, m)) {
            return m;
        }
    }
    throw NoFeasiblePolicy("no plan within horizon " + std::to_string(max_horizon));
}

TrajectorySet enumerate_trajectories(const lang::ActionDescription& d, int max_horizon, int slack,
                                     std::size_t max_models) {
    if (slack < 0) {
        throw Error("slack must be non-negative, got " + std::to_string(slack));
    }
    if (max_models == 0) {
        throw Error("max_models must be positive");
    }
    d.validate();

    TrajectorySet set;
    set.vocab = std::make_shared<Vocab>();
    set.m_star = find_min_horizon(d, max_horizon);
    set.horizon_used = set.m_star;

    int last = std::min(set.m_star + slack, max_horizon);
    std::size_t remaining = max_models;
    for (int m = set.m_star; m <= last; ++m) {
        if (remaining == 0) {
            // Budget exhausted: the set is only capped if a later horizon
            // would still have contributed something.
            if (feasible_at(d, m)) {
                set.capped = true;
                break;
            }
            continue;
        }
        // Ask for one model beyond the budget so a horizon that lands
        // exactly on the cap is not misreported as truncated.
        std::vector<asp::Interpretation> models = asp::solve(lang::translate(d, m), remaining + 1);
        if (models.size() > remaining) {
            models.resize(remaining);
            set.capped = true;
        }
        set.horizon_used = m;
        for (const asp::Interpretation& model : models) {
            set.trajectories.push_back(lang::extract_trajectory(model, d, m, set.vocab));
        }
        remaining -= models.size();
        if (set.capped) {
            break;
        }
    }
    return set;
}

} // namespace asprl::mdp
