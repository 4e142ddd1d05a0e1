#include "asprl/grid/domain.hpp"

#include <sstream>

#include "asprl/lang/parser.hpp"

namespace asprl::grid {

namespace {

void cell_term(std::ostringstream& out, Cell c) {
    out << "at=(" << c.x << ',' << c.y << ')';
}

} // namespace

std::string domain_text(const GridMap& map, const std::set<Cell>& known_walls,
                        const std::set<Cell>& known_holes) {
    map.validate();
    for (Cell c : known_walls) {
        if (!map.in_bounds(c)) {
            throw MapError("known wall out of bounds");
        }
    }
    for (Cell c : known_holes) {
        if (!map.in_bounds(c) || known_walls.count(c) > 0) {
            throw MapError("known hole out of bounds or clashing with a wall");
        }
    }

    std::ostringstream out;
    out << "% grid " << map.width << "x" << map.height << ", start "
        << "(" << map.start.x << ',' << map.start.y << "), goal "
        << "(" << map.goal.x << ',' << map.goal.y << ")\n";
    out << "fluent at : cell(0.." << map.width - 1 << ", 0.." << map.height - 1 << ").\n";
    for (Action a : all_actions) {
        out << "action " << action_name(a) << ".\n";
    }

    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            Cell source{x, y};
            if (known_walls.count(source) > 0 || known_holes.count(source) > 0) {
                continue;
            }
            for (Action a : all_actions) {
                Cell d = delta(a);
                Cell target{source.x + d.x, source.y + d.y};
                bool blocked = !map.in_bounds(target) || known_walls.count(target) > 0;
                out << action_name(a) << " causes ";
                cell_term(out, blocked ? source : target);
                out << " after ";
                cell_term(out, source);
                out << ".\n";
            }
        }
    }

    for (Cell hole : known_holes) {
        out << "never ";
        cell_term(out, hole);
        out << ".\n";
    }
    out << "initially ";
    cell_term(out, map.start);
    out << ".\n";
    out << "goal ";
    cell_term(out, map.goal);
    out << ".\n";
    return out.str();
}

lang::ActionDescription as_action_description(const GridMap& map,
                                              const std::set<Cell>& known_walls,
                                              const std::set<Cell>& known_holes) {
    return lang::parse_domain(domain_text(map, known_walls, known_holes));
}

} // namespace asprl::grid
