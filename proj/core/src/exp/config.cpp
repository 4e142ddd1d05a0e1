#include "asprl/exp/config.hpp"

#include <algorithm>

namespace asprl::exp {

const std::string& algo_label(AlgoKind kind) {
    static const std::string labels[4] = {"q", "sarsa", "asp_q", "asp_sarsa"};
    return labels[static_cast<int>(kind)];
}

std::optional<AlgoKind> parse_algo(std::string_view label) {
    for (AlgoKind kind :
         {AlgoKind::q, AlgoKind::sarsa, AlgoKind::asp_q, AlgoKind::asp_sarsa}) {
        if (algo_label(kind) == label) {
            return kind;
        }
    }
    return std::nullopt;
}

std::vector<AlgoKind> parse_algo_list(std::string_view labels) {
    std::vector<AlgoKind> kinds;
    std::size_t from = 0;
    while (from <= labels.size()) {
        std::size_t comma = labels.find(',', from);
        std::string_view item = labels.substr(
            from, comma == std::string_view::npos ? std::string_view::npos : comma - from);
        std::optional<AlgoKind> kind = parse_algo(item);
        if (!kind) {
            throw Error("unknown algorithm '" + std::string(item) + "'");
        }
        if (std::find(kinds.begin(), kinds.end(), *kind) != kinds.end()) {
            throw Error("algorithm '" + std::string(item) + "' listed twice");
        }
        kinds.push_back(*kind);
        if (comma == std::string_view::npos) {
            break;
        }
        from = comma + 1;
    }
    if (kinds.empty()) {
        throw Error("empty algorithm list");
    }
    return kinds;
}

bool is_asp(AlgoKind kind) { return kind == AlgoKind::asp_q || kind == AlgoKind::asp_sarsa; }

rl::Algo base_algo(AlgoKind kind) {
    return (kind == AlgoKind::q || kind == AlgoKind::asp_q) ? rl::Algo::q_learning
                                                            : rl::Algo::sarsa;
}

void ExperimentConfig::validate() const {
    if (situation < 0 || situation > 3) {
        throw Error("situation must be 0 (custom) or 1..3");
    }
    map_before.validate();
    map_after.validate();
    if (map_before.width != map_after.width || map_before.height != map_after.height ||
        map_before.start != map_after.start || map_before.goal != map_after.goal) {
        throw Error("the two maps must share dimensions, start and goal");
    }
    if (algorithms.empty()) {
        throw Error("no algorithms selected");
    }
    if (episodes < 2) {
        throw Error("need at least 2 episodes");
    }
    if (change_at < 1 || change_at >= episodes) {
        throw Error("change_at must satisfy 1 <= change_at < episodes");
    }
    if (sessions < 1) {
        throw Error("sessions must be at least 1");
    }
    params.validate();
    if (max_horizon < 1) {
        throw Error("max_horizon must be at least 1");
    }
    if (max_models < 1) {
        throw Error("max_models must be at least 1");
    }
    if (step_limit < 1) {
        throw Error("step_limit must be at least 1");
    }
    if (jobs < 1) {
        throw Error("jobs must be at least 1");
    }
}

} // namespace asprl::exp
