#include "asprl/lang/simulate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace asprl::lang {

namespace {

bool holds(const Valuation& s, const FluentEq& eq) {
    auto it = s.find(eq.fluent);
    return it != s.end() && it->second == eq.value;
}

bool in_set(const std::set<FluentEq>& caused, const std::vector<FluentEq>& cond) {
    return std::all_of(cond.begin(), cond.end(),
                       [&](const FluentEq& eq) { return caused.count(eq) > 0; });
}

/// Closes `caused` under the static laws; conditions are checked against
/// caused atoms only, so the result is exactly what the laws can derive.
void close_under_statics(const ActionDescription& d, std::set<FluentEq>& caused) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const StaticLaw& law : d.static_laws) {
            if (in_set(caused, law.condition) && caused.insert(law.head).second) {
                changed = true;
            }
        }
    }
}

bool violates_never(const ActionDescription& d, const Valuation& s) {
    return std::any_of(d.never_conditions.begin(), d.never_conditions.end(),
                       [&](const std::vector<FluentEq>& conj) { return satisfies(s, conj); });
}

bool statics_hold(const ActionDescription& d, const Valuation& s) {
    return std::all_of(d.static_laws.begin(), d.static_laws.end(), [&](const StaticLaw& law) {
        return !satisfies(s, law.condition) || holds(s, law.head);
    });
}

/// Calls fn with every complete valuation of the fluents.
void for_each_valuation(const ActionDescription& d, const std::function<void(const Valuation&)>& fn) {
    Valuation v;
    std::function<void(std::size_t)> walk = [&](std::size_t f) {
        if (f == d.fluents.size()) {
            fn(v);
            return;
        }
        for (const std::string& value : d.fluents[f].values) {
            v[d.fluents[f].name] = value;
            walk(f + 1);
        }
        v.erase(d.fluents[f].name);
    };
    walk(0);
}

} // namespace

bool satisfies(const Valuation& s, const std::vector<FluentEq>& cond) {
    return std::all_of(cond.begin(), cond.end(), [&](const FluentEq& eq) { return holds(s, eq); });
}

std::vector<Valuation> legal_states(const ActionDescription& d) {
    d.validate();
    std::vector<Valuation> result;
    for_each_valuation(d, [&](const Valuation& s) {
        if (!statics_hold(d, s) || violates_never(d, s)) {
            return;
        }
        // Statically determined fluents must get their value from the
        // regular ones; with the static laws satisfied the closure cannot
        // leave s, so membership is the whole check.
        std::set<FluentEq> caused;
        for (const auto& [fluent, value] : s) {
            if (!d.statically_determined(fluent)) {
                caused.insert({fluent, value});
            }
        }
        close_under_statics(d, caused);
        for (const auto& [fluent, value] : s) {
            if (d.statically_determined(fluent) && caused.count({fluent, value}) == 0) {
                return;
            }
        }
        result.push_back(s);
    });
    return result;
}

std::vector<Valuation> successors(const ActionDescription& d, const Valuation& s,
                                  const std::string& a) {
    d.validate();
    if (d.find_action(a) == nullptr) {
        throw ValidationError("unknown action '" + a + "'");
    }
    for (const FluentConstant& fluent : d.fluents) {
        auto it = s.find(fluent.name);
        if (it == s.end()) {
            throw ValidationError("state lacks a value for fluent '" + fluent.name + "'");
        }
        if (std::find(fluent.values.begin(), fluent.values.end(), it->second) ==
            fluent.values.end()) {
            throw ValueOutsideDomain("value '" + it->second + "' not in the domain of '" +
                                     fluent.name + "'");
        }
    }

    // Laws whose current-state part applies to (s, a); whether one fires
    // still depends on its next-state condition.
    std::vector<const DynamicLaw*> applicable;
    for (const DynamicLaw& law : d.dynamic_laws) {
        bool match = satisfies(s, law.precondition_fluents) &&
                     std::all_of(law.precondition_actions.begin(), law.precondition_actions.end(),
                                 [&](const std::string& name) { return name == a; });
        if (match) {
            applicable.push_back(&law);
        }
    }

    std::vector<Valuation> result;
    for_each_valuation(d, [&](const Valuation& next) {
        if (!statics_hold(d, next) || violates_never(d, next)) {
            return;
        }
        // Heads of fired laws must hold; a fired choice law must pick
        // exactly one alternative.
        for (const DynamicLaw* law : applicable) {
            if (!satisfies(next, law->condition)) {
                continue;
            }
            std::size_t chosen = std::count_if(law->head.begin(), law->head.end(),
                                               [&](const FluentEq& alt) { return holds(next, alt); });
            if (chosen != 1) {
                return;
            }
        }
        // Foundedness: fired heads closed under statics must reproduce the
        // candidate exactly. Firing is re-derived against the caused set so
        // that next-state conditions are themselves supported.
        std::set<FluentEq> caused;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const DynamicLaw* law : applicable) {
                if (!in_set(caused, law->condition)) {
                    continue;
                }
                for (const FluentEq& alt : law->head) {
                    if (holds(next, alt) && caused.insert(alt).second) {
                        changed = true;
                    }
                }
            }
            for (const StaticLaw& law : d.static_laws) {
                if (in_set(caused, law.condition) && caused.insert(law.head).second) {
                    changed = true;
                }
            }
        }
        for (const auto& [fluent, value] : next) {
            if (caused.count({fluent, value}) == 0) {
                return;
            }
        }
        result.push_back(next);
    });
    return result;
}

std::vector<Valuation> initial_states(const ActionDescription& d) {
    std::vector<Valuation> result;
    for (Valuation& s : legal_states(d)) {
        if (satisfies(s, d.initial_condition)) {
            result.push_back(std::move(s));
        }
    }
    return result;
}

std::vector<Valuation> goal_states(const ActionDescription& d) {
    std::vector<Valuation> result;
    for (Valuation& s : legal_states(d)) {
        if (satisfies(s, d.goal_condition)) {
            result.push_back(std::move(s));
        }
    }
    return result;
}

} // namespace asprl::lang
