#include "asprl/lang/domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace asprl::lang {

const FluentConstant* ActionDescription::find_fluent(std::string_view name) const {
    for (const FluentConstant& fluent : fluents) {
        if (fluent.name == name) {
            return &fluent;
        }
    }
    return nullptr;
}

const ActionConstant* ActionDescription::find_action(std::string_view name) const {
    for (const ActionConstant& action : actions) {
        if (action.name == name) {
            return &action;
        }
    }
    return nullptr;
}

bool ActionDescription::statically_determined(std::string_view fluent) const {
    for (const StaticLaw& law : static_laws) {
        if (law.head.fluent == fluent) {
            return true;
        }
    }
    return false;
}

namespace {

void check_eq(const ActionDescription& d, const FluentEq& eq, const char* where) {
    const FluentConstant* fluent = d.find_fluent(eq.fluent);
    if (!fluent) {
        throw UndeclaredConstant(std::string(where) + " references undeclared fluent '" +
                                 eq.fluent + "'");
    }
    if (std::find(fluent->values.begin(), fluent->values.end(), eq.value) ==
        fluent->values.end()) {
        throw ValueOutsideDomain(std::string(where) + ": value '" + eq.value +
                                 "' is not in the domain of fluent '" + eq.fluent + "'");
    }
}

void check_conjunction(const ActionDescription& d, const std::vector<FluentEq>& conj,
                       const char* where) {
    for (const FluentEq& eq : conj) {
        check_eq(d, eq, where);
    }
}

} // namespace

void ActionDescription::validate() const {
    if (fluents.empty()) {
        throw ValidationError("action description declares no fluents");
    }
    std::set<std::string> names;
    for (const FluentConstant& fluent : fluents) {
        if (fluent.name.empty()) {
            throw ValidationError("fluent with empty name");
        }
        if (!names.insert(fluent.name).second) {
            throw ValidationError("duplicate constant name '" + fluent.name + "'");
        }
        if (fluent.values.empty()) {
            throw ValidationError("fluent '" + fluent.name + "' has an empty domain");
        }
        std::set<std::string> values(fluent.values.begin(), fluent.values.end());
        if (values.size() != fluent.values.size()) {
            throw ValidationError("fluent '" + fluent.name + "' has duplicate domain values");
        }
    }
    for (const ActionConstant& action : actions) {
        if (action.name.empty()) {
            throw ValidationError("action with empty name");
        }
        if (!names.insert(action.name).second) {
            throw ValidationError("duplicate constant name '" + action.name + "'");
        }
    }

    for (const StaticLaw& law : static_laws) {
        check_eq(*this, law.head, "static law head");
        check_conjunction(*this, law.condition, "static law condition");
    }
    for (const DynamicLaw& law : dynamic_laws) {
        if (law.head.empty()) {
            throw ValidationError("dynamic law with empty head");
        }
        for (const FluentEq& alt : law.head) {
            check_eq(*this, alt, "dynamic law head");
            if (alt.fluent != law.head.front().fluent) {
                throw ValidationError("choice head alternatives must share one fluent, got '" +
                                      law.head.front().fluent + "' and '" + alt.fluent + "'");
            }
        }
        if (law.is_choice()) {
            std::set<std::string> alternatives;
            for (const FluentEq& alt : law.head) {
                if (!alternatives.insert(alt.value).second) {
                    throw ValidationError("duplicate choice head alternative '" + alt.value + "'");
                }
            }
        }
        if (statically_determined(law.head.front().fluent)) {
            throw ValidationError("dynamic law head fluent '" + law.head.front().fluent +
                                  "' is statically determined");
        }
        check_conjunction(*this, law.condition, "dynamic law condition");
        check_conjunction(*this, law.precondition_fluents, "dynamic law precondition");
        for (const std::string& action : law.precondition_actions) {
            if (!find_action(action)) {
                throw UndeclaredConstant("dynamic law precondition references undeclared action '" +
                                         action + "'");
            }
        }
    }
    check_conjunction(*this, initial_condition, "initial condition");
    check_conjunction(*this, goal_condition, "goal condition");
    for (const std::vector<FluentEq>& conj : never_conditions) {
        check_conjunction(*this, conj, "never condition");
    }
}

std::string format_state(const ActionDescription& d, const Valuation& v) {
    std::ostringstream out;
    bool first = true;
    for (const FluentConstant& fluent : d.fluents) {
        auto it = v.find(fluent.name);
        if (it == v.end()) {
            throw ValidationError("valuation misses fluent '" + fluent.name + "'");
        }
        if (!first) {
            out << ';';
        }
        out << fluent.name << '=' << it->second;
        first = false;
    }
    return out.str();
}

Valuation parse_state(const ActionDescription& d, std::string_view text) {
    Valuation v;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(';', begin);
        std::string_view part =
            text.substr(begin, end == std::string_view::npos ? std::string_view::npos
                                                             : end - begin);
        std::size_t eq = part.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("malformed state term '" + std::string(part) + "'");
        }
        FluentEq entry{std::string(part.substr(0, eq)), std::string(part.substr(eq + 1))};
        check_eq(d, entry, "state");
        if (!v.emplace(entry.fluent, entry.value).second) {
            throw ValidationError("state assigns fluent '" + entry.fluent + "' twice");
        }
        if (end == std::string_view::npos) {
            break;
        }
        begin = end + 1;
    }
    if (v.size() != d.fluents.size()) {
        throw ValidationError("state does not assign every fluent");
    }
    return v;
}

} // namespace asprl::lang
