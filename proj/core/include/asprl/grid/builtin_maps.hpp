#ifndef ASPRL_GRID_BUILTIN_MAPS_HPP
#define ASPRL_GRID_BUILTIN_MAPS_HPP

#include <string>

#include "asprl/grid/map.hpp"

namespace asprl::grid {

/// The four experiment maps, embedded so the binaries work from any
/// directory; the files under maps/ hold the same bytes (a test keeps them
/// in sync). 1: empty. 2: sparse walls and holes. 3: denser obstacles.
/// 4: a walled serpentine with exactly one route.
const std::string& builtin_map_text(int number);

GridMap builtin_map(int number);

} // namespace asprl::grid

#endif
