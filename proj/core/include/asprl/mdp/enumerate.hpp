#ifndef ASPRL_MDP_ENUMERATE_HPP
#define ASPRL_MDP_ENUMERATE_HPP

#include <cstddef>

#include "asprl/lang/translate.hpp"
#include "asprl/mdp/trajectory.hpp"

namespace asprl::mdp {

/// No bounded-horizon plan exists: learning cannot start.
class NoFeasiblePolicy : public Error {
public:
    using Error::Error;
};

/// Smallest m in 1..max_horizon for which translate(d, m) has a stable
/// model; throws NoFeasiblePolicy when there is none.
int find_min_horizon(const lang::ActionDescription& d, int max_horizon);

/// Enumerates goal-reaching trajectories of `d`. Starting from m = 1, finds
/// the minimal feasible horizon m*, then collects every stable model for
/// horizons m* .. min(m* + slack, max_horizon) into one TrajectorySet (a
/// model and its trajectory are in bijection, and trajectories of different
/// horizons differ in length, so no duplicates arise). Collection stops at
/// max_models; `capped` records whether the cap cut the last horizon short.
TrajectorySet enumerate_trajectories(const lang::ActionDescription& d, int max_horizon, int slack,
                                     std::size_t max_models);

} // namespace asprl::mdp

#endif
