#include "asprl/mdp/value_iteration.hpp"

#include <algorithm>
#include <cmath>

namespace asprl::mdp {

std::size_t ExplicitMdp::state_index(const std::string& name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
        throw Error("unknown state '" + name + "'");
    }
    return static_cast<std::size_t>(it - states.begin());
}

std::size_t ExplicitMdp::action_index(const std::string& name) const {
    auto it = std::find(actions.begin(), actions.end(), name);
    if (it == actions.end()) {
        throw Error("unknown action '" + name + "'");
    }
    return static_cast<std::size_t>(it - actions.begin());
}

namespace {

void validate(const ExplicitMdp& mdp, double gamma, double tolerance) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw Error("gamma must be in [0, 1)");
    }
    if (!(tolerance > 0.0)) {
        throw Error("tolerance must be positive");
    }
    std::size_t n = mdp.states.size();
    if (mdp.transitions.size() != n || mdp.terminal.size() != n) {
        throw Error("transition/terminal tables do not match the state count");
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (mdp.transitions[s].size() != mdp.actions.size()) {
            throw Error("state '" + mdp.states[s] + "' has a malformed action table");
        }
        for (const std::vector<Outcome>& outcomes : mdp.transitions[s]) {
            if (outcomes.empty()) {
                continue;
            }
            double total = 0.0;
            for (const Outcome& outcome : outcomes) {
                if (outcome.next >= n) {
                    throw Error("outcome points outside the state set");
                }
                total += outcome.probability;
            }
            if (std::abs(total - 1.0) > 1e-9) {
                throw BadDistribution("probabilities for state '" + mdp.states[s] +
                                      "' sum to " + std::to_string(total));
            }
        }
    }
}

double backup(const ExplicitMdp& mdp, const std::vector<double>& values, double gamma,
              std::size_t s, std::size_t a) {
    double q = 0.0;
    for (const Outcome& outcome : mdp.transitions[s][a]) {
        double cont = mdp.terminal[outcome.next] ? 0.0 : values[outcome.next];
        q += outcome.probability * (outcome.reward + gamma * cont);
    }
    return q;
}

} // namespace

ValueIterationResult value_iteration(const ExplicitMdp& mdp, double gamma, double tolerance) {
    validate(mdp, gamma, tolerance);
    std::size_t n = mdp.states.size();
    ValueIterationResult result;
    result.values.assign(n, 0.0);
    result.policy.assign(n, -1);

    for (;;) {
        double residual = 0.0;
        ++result.sweeps;
        for (std::size_t s = 0; s < n; ++s) {
            if (mdp.terminal[s]) {
                continue;
            }
            bool any = false;
            double best = 0.0;
            int best_action = -1;
            for (std::size_t a = 0; a < mdp.actions.size(); ++a) {
                if (mdp.transitions[s][a].empty()) {
                    continue;
                }
                double q = backup(mdp, result.values, gamma, s, a);
                if (!any || q > best) {
                    any = true;
                    best = q;
                    best_action = static_cast<int>(a);
                }
            }
            if (!any) {
                continue;
            }
            residual = std::max(residual, std::abs(best - result.values[s]));
            result.values[s] = best;
            result.policy[s] = best_action;
        }
        if (residual < tolerance) {
            break;
        }
    }
    return result;
}

std::vector<double> evaluate_policy(const ExplicitMdp& mdp, const std::vector<int>& policy,
                                    double gamma, double tolerance) {
    validate(mdp, gamma, tolerance);
    std::size_t n = mdp.states.size();
    if (policy.size() != n) {
        throw Error("policy size does not match the state count");
    }
    std::vector<double> values(n, 0.0);
    for (;;) {
        double residual = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            if (mdp.terminal[s] || policy[s] < 0) {
                continue;
            }
            std::size_t a = static_cast<std::size_t>(policy[s]);
            if (a >= mdp.actions.size() || mdp.transitions[s][a].empty()) {
                throw Error("policy picks an unavailable action in state '" + mdp.states[s] + "'");
            }
            double v = backup(mdp, values, gamma, s, a);
            residual = std::max(residual, std::abs(v - values[s]));
            values[s] = v;
        }
        if (residual < tolerance) {
            return values;
        }
    }
}

} // namespace asprl::mdp
