#include "asprl/rl/learning.hpp"

#include <algorithm>

namespace asprl::rl {

const char* terminal_cause_name(TerminalCause cause) {
    switch (cause) {
    case TerminalCause::none: return "none";
    case TerminalCause::goal: return "goal";
    case TerminalCause::hole: return "hole";
    case TerminalCause::step_limit: return "step_limit";
    }
    return "?";
}

void LearningParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw Error("alpha must be in (0, 1]");
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw Error("gamma must be in [0, 1)");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw Error("epsilon must be in [0, 1]");
    }
}

const std::string& epsilon_greedy(const mdp::QTable& q, const std::string& s,
                                  const std::vector<std::string>& available, double epsilon,
                                  Rng& rng) {
    if (available.empty()) {
        throw NoAvailableActions("no actions available in state '" + s + "'");
    }
    if (epsilon > 0.0 && rng.next_double() < epsilon) {
        return available[rng.next_index(available.size())];
    }
    const mdp::QTable::Row* row = q.row(s);
    auto value_of = [&](const std::string& a) {
        if (row == nullptr) {
            return 0.0;
        }
        auto it = row->find(a);
        return it == row->end() ? 0.0 : it->second.value;
    };
    double best = value_of(available[0]);
    std::vector<std::size_t> ties{0};
    for (std::size_t i = 1; i < available.size(); ++i) {
        double v = value_of(available[i]);
        if (v > best) {
            best = v;
            ties.assign(1, i);
        } else if (v == best) {
            ties.push_back(i);
        }
    }
    std::size_t pick = ties.size() == 1 ? ties[0] : ties[rng.next_index(ties.size())];
    return available[pick];
}

namespace {

double max_over(const mdp::QTable& q, const std::string& s,
                const std::vector<std::string>& actions) {
    if (actions.empty()) {
        return 0.0;
    }
    const mdp::QTable::Row* row = q.row(s);
    double best = 0.0;
    bool first = true;
    for (const std::string& a : actions) {
        double v = 0.0;
        if (row != nullptr) {
            auto it = row->find(a);
            if (it != row->end()) {
                v = it->second.value;
            }
        }
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

void td_update(mdp::QTable& q, const std::string& s, const std::string& a, double target,
               const LearningParams& params) {
    mdp::QEntry& entry = q.ensure(s, a, params.init.fallback());
    q.set(s, a, entry.value + params.alpha * (target - entry.value));
}

} // namespace

void q_learning_update(mdp::QTable& q, const std::string& s, const std::string& a, double r,
                       const std::string& s_next, const std::vector<std::string>& available_next,
                       const LearningParams& params) {
    td_update(q, s, a, r + params.gamma * max_over(q, s_next, available_next), params);
}

void sarsa_update(mdp::QTable& q, const std::string& s, const std::string& a, double r,
                  const std::string& s_next, const std::optional<std::string>& a_next,
                  const LearningParams& params) {
    double bootstrap = a_next ? q.value_or(s_next, *a_next, 0.0) : 0.0;
    td_update(q, s, a, r + params.gamma * bootstrap, params);
}

EpisodeResult run_episode(Environment& env, mdp::QTable& q, const mdp::ReducedMdp& mdp,
                          const LearningParams& params, Algo algo, int step_limit, Rng& rng) {
    params.validate();
    if (step_limit < 1) {
        throw Error("step_limit must be at least 1");
    }

    auto available = [&](const std::string& s) -> const std::vector<std::string>& {
        const std::vector<std::string>* allowed = mdp.actions_at(s);
        return allowed != nullptr ? *allowed : env.action_names();
    };
    auto key_pairs = [&](const std::string& s, const std::vector<std::string>& actions) {
        for (const std::string& a : actions) {
            if (q.find(s, a) == nullptr) {
                q.ensure(s, a, params.init.draw(rng));
            }
        }
    };

    EpisodeResult result;
    std::string state = env.reset();
    const std::vector<std::string>* actions = &available(state);
    key_pairs(state, *actions);
    std::string action = epsilon_greedy(q, state, *actions, params.epsilon, rng);

    for (;;) {
        StepResult out = env.step(action, rng);
        ++result.steps;
        result.return_ += out.reward;

        if (out.terminal) {
            if (algo == Algo::sarsa) {
                sarsa_update(q, state, action, out.reward, out.state, std::nullopt, params);
            } else {
                q_learning_update(q, state, action, out.reward, out.state, {}, params);
            }
            result.terminal = out.cause;
            break;
        }

        const std::vector<std::string>& next_actions = available(out.state);
        key_pairs(out.state, next_actions);
        std::string next_action = epsilon_greedy(q, out.state, next_actions, params.epsilon, rng);
        if (algo == Algo::sarsa) {
            sarsa_update(q, state, action, out.reward, out.state, next_action, params);
        } else {
            q_learning_update(q, state, action, out.reward, out.state, next_actions, params);
        }

        if (result.steps >= step_limit) {
            result.terminal = TerminalCause::step_limit;
            break;
        }
        state = out.state;
        action = std::move(next_action);
    }
    return result;
}

} // namespace asprl::rl
