#ifndef ASPRL_GRID_MAP_HPP
#define ASPRL_GRID_MAP_HPP

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "asprl/errors.hpp"

namespace asprl::grid {

class MapError : public Error {
public:
    using Error::Error;
};

class NonRectangular : public MapError {
public:
    using MapError::MapError;
};

class MissingStartOrGoal : public MapError {
public:
    using MapError::MapError;
};

class DuplicateStartOrGoal : public MapError {
public:
    using MapError::MapError;
};

class InvalidChar : public MapError {
public:
    using MapError::MapError;
};

/// Grid coordinates with (0,0) the bottom-left cell; x grows right, y grows
/// up. Map files store the top row first.
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Action { up, down, left, right };

inline constexpr std::array<Action, 4> all_actions{Action::up, Action::down, Action::left,
                                                   Action::right};

const std::string& action_name(Action a);
std::optional<Action> parse_action(std::string_view name);
Cell delta(Action a);
/// The two slip directions of an intended action (never the reverse).
std::array<Action, 2> orthogonals(Action a);

struct GridMap {
    int width = 0;
    int height = 0;
    std::set<Cell> walls;
    std::set<Cell> holes;
    Cell start;
    Cell goal;

    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    bool is_wall(Cell c) const { return walls.count(c) > 0; }
    bool is_hole(Cell c) const { return holes.count(c) > 0; }
    /// In bounds and neither wall nor hole.
    bool is_free(Cell c) const { return in_bounds(c) && !is_wall(c) && !is_hole(c); }

    /// Checks the structural invariants of a hand-built map.
    void validate() const;
};

/// Parses the ASCII map format: rows of `.`, `W`, `H`, `S`, `G`, top row
/// first, all rows the same width, exactly one S and one G.
GridMap load_map(std::string_view text);

/// Inverse of load_map; every row ends with a newline, so loading a
/// serialized map reproduces the text byte for byte.
std::string serialize_map(const GridMap& map);

} // namespace asprl::grid

#endif
