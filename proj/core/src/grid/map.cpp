#include "asprl/grid/map.hpp"

#include <vector>

namespace asprl::grid {

const std::string& action_name(Action a) {
    static const std::string names[4] = {"up", "down", "left", "right"};
    return names[static_cast<int>(a)];
}

std::optional<Action> parse_action(std::string_view name) {
    for (Action a : all_actions) {
        if (action_name(a) == name) {
            return a;
        }
    }
    return std::nullopt;
}

Cell delta(Action a) {
    switch (a) {
    case Action::up: return {0, 1};
    case Action::down: return {0, -1};
    case Action::left: return {-1, 0};
    case Action::right: return {1, 0};
    }
    return {0, 0};
}

std::array<Action, 2> orthogonals(Action a) {
    switch (a) {
    case Action::up:
    case Action::down: return {Action::left, Action::right};
    case Action::left:
    case Action::right: return {Action::up, Action::down};
    }
    return {a, a};
}

void GridMap::validate() const {
    if (width < 1 || height < 1) {
        throw MapError("map must have positive dimensions");
    }
    auto check_in = [&](Cell c, const char* what) {
        if (!in_bounds(c)) {
            throw MapError(std::string(what) + " out of bounds");
        }
    };
    for (Cell c : walls) {
        check_in(c, "wall");
    }
    for (Cell c : holes) {
        check_in(c, "hole");
        if (is_wall(c)) {
            throw MapError("cell is both wall and hole");
        }
    }
    check_in(start, "start");
    check_in(goal, "goal");
    if (!is_free(start) || !is_free(goal)) {
        throw MapError("start/goal must be free cells");
    }
    if (start == goal) {
        throw MapError("start and goal coincide");
    }
}

GridMap load_map(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t from = 0;
    while (from < text.size()) {
        std::size_t nl = text.find('\n', from);
        if (nl == std::string_view::npos) {
            rows.push_back(text.substr(from));
            break;
        }
        rows.push_back(text.substr(from, nl - from));
        from = nl + 1;
    }
    if (rows.empty()) {
        throw NonRectangular("map has no rows");
    }
    std::size_t width = rows[0].size();
    if (width == 0) {
        throw NonRectangular("map has an empty row");
    }
    for (const std::string_view& row : rows) {
        if (row.size() != width) {
            throw NonRectangular("rows differ in width");
        }
    }

    GridMap map;
    map.width = static_cast<int>(width);
    map.height = static_cast<int>(rows.size());
    int starts = 0;
    int goals = 0;
    for (int r = 0; r < map.height; ++r) {
        for (int c = 0; c < map.width; ++c) {
            // Row 0 of the file is the top of the grid.
            Cell cell{c, map.height - 1 - r};
            switch (rows[r][c]) {
            case '.': break;
            case 'W': map.walls.insert(cell); break;
            case 'H': map.holes.insert(cell); break;
            case 'S':
                ++starts;
                map.start = cell;
                break;
            case 'G':
                ++goals;
                map.goal = cell;
                break;
            default:
                throw InvalidChar(std::string("unexpected character '") + rows[r][c] + "'");
            }
        }
    }
    if (starts == 0 || goals == 0) {
        throw MissingStartOrGoal("map needs exactly one S and one G");
    }
    if (starts > 1 || goals > 1) {
        throw DuplicateStartOrGoal("map has more than one S or G");
    }
    map.validate();
    return map;
}

std::string serialize_map(const GridMap& map) {
    std::string out;
    out.reserve(static_cast<std::size_t>((map.width + 1) * map.height));
    for (int y = map.height - 1; y >= 0; --y) {
        for (int x = 0; x < map.width; ++x) {
            Cell cell{x, y};
            char ch = '.';
            if (map.is_wall(cell)) {
                ch = 'W';
            } else if (map.is_hole(cell)) {
                ch = 'H';
            } else if (cell == map.start) {
                ch = 'S';
            } else if (cell == map.goal) {
                ch = 'G';
            }
            out.push_back(ch);
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace asprl::grid
