#ifndef ASPRL_GRID_DOMAIN_HPP
#define ASPRL_GRID_DOMAIN_HPP

#include <set>
#include <string>

#include "asprl/grid/map.hpp"
#include "asprl/lang/domain.hpp"

namespace asprl::grid {

/// The agent's model of a map as action-language text: one `at` fluent over
/// the whole grid, the four actions with their expected (deterministic)
/// effects per source cell, bump-stay laws toward known walls and the
/// boundary, `never` constraints for known holes, and the start/goal
/// conditions. Unknown obstacles are modeled as free space; that gap
/// between model and environment is the point of the exercise.
std::string domain_text(const GridMap& map, const std::set<Cell>& known_walls,
                        const std::set<Cell>& known_holes);

/// domain_text parsed into an ActionDescription (single code path with the
/// domain-file format).
lang::ActionDescription as_action_description(const GridMap& map,
                                              const std::set<Cell>& known_walls,
                                              const std::set<Cell>& known_holes);

} // namespace asprl::grid

#endif
