#ifndef ASPRL_EXP_CONFIG_HPP
#define ASPRL_EXP_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asprl/grid/map.hpp"
#include "asprl/rl/learning.hpp"

namespace asprl::exp {

/// The four experiment arms: plain TD baselines and their ASP-reduced
/// counterparts.
enum class AlgoKind { q, sarsa, asp_q, asp_sarsa };

const std::string& algo_label(AlgoKind kind);
std::optional<AlgoKind> parse_algo(std::string_view label);
/// Comma-separated labels -> kinds, order preserved; throws Error on
/// unknown or repeated labels.
std::vector<AlgoKind> parse_algo_list(std::string_view labels);

bool is_asp(AlgoKind kind);
rl::Algo base_algo(AlgoKind kind);

struct ExperimentConfig {
    /// 1: map1->map2, 2: map1->map3, 3: map1->map4, 0: custom map pair.
    int situation = 1;
    grid::GridMap map_before;
    grid::GridMap map_after;
    std::vector<AlgoKind> algorithms{AlgoKind::q, AlgoKind::sarsa, AlgoKind::asp_q,
                                     AlgoKind::asp_sarsa};
    int episodes = 10000;
    int change_at = 5000;
    int sessions = 30;
    rl::LearningParams params;
    std::uint64_t seed = 1;
    /// Extra horizons beyond m* to enumerate; negative = auto (2 * m*).
    int slack = -1;
    int max_horizon = 60;
    std::size_t max_models = 100000;
    int step_limit = 2000;
    int jobs = 1;
    std::string out_path = "results.csv";

    void validate() const;
};

} // namespace asprl::exp

#endif
