#include "asprl/grid/builtin_maps.hpp"

namespace asprl::grid {

namespace {

const std::string map1 = ".........G\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "..........\n"
                         "S.........\n";

const std::string map2 = ".........G\n"
                         "........W.\n"
                         "......H...\n"
                         "....W.....\n"
                         "..........\n"
                         "..........\n"
                         "H.........\n"
                         "..........\n"
                         "..........\n"
                         "S..H......\n";

const std::string map3 = ".........G\n"
                         ".H........\n"
                         "......W...\n"
                         "......H...\n"
                         "....W.....\n"
                         "...W......\n"
                         "..W.......\n"
                         "..W...H...\n"
                         "..........\n"
                         "S.........\n";

const std::string map4 = "W........G\n"
                         "W.WWWWWWWW\n"
                         "W.WWWWWWWW\n"
                         "W.WWWWWWWW\n"
                         "W.WWWWWWWW\n"
                         "W.........\n"
                         "WWWWWWWWW.\n"
                         "WWWWWWWWW.\n"
                         "WWWWWWWWW.\n"
                         "S.........\n";

} // namespace

const std::string& builtin_map_text(int number) {
    switch (number) {
    case 1: return map1;
    case 2: return map2;
    case 3: return map3;
    case 4: return map4;
    }
    throw MapError("builtin map number must be 1..4");
}

GridMap builtin_map(int number) { return load_map(builtin_map_text(number)); }

} // namespace asprl::grid
