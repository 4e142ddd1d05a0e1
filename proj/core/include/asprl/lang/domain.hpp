#ifndef ASPRL_LANG_DOMAIN_HPP
#define ASPRL_LANG_DOMAIN_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "asprl/errors.hpp"

namespace asprl::lang {

class ValidationError : public Error {
public:
    using Error::Error;
};

class UndeclaredConstant : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ValueOutsideDomain : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A multi-valued fluent constant with a finite value domain.
struct FluentConstant {
    std::string name;
    std::vector<std::string> values;
};

struct ActionConstant {
    std::string name;
};

/// The atomic formula c = v.
struct FluentEq {
    std::string fluent;
    std::string value;

    friend bool operator==(const FluentEq&, const FluentEq&) = default;
    friend auto operator<=>(const FluentEq&, const FluentEq&) = default;
};

/// caused head if condition (both parts about the same state).
struct StaticLaw {
    FluentEq head;
    std::vector<FluentEq> condition;
};

/// caused head if condition after precondition: `head` holds in the next
/// state when `precondition` held in the current state (fluent equalities
/// plus occurring actions) and `condition` holds in the next state. A head
/// with several alternatives is a non-deterministic (choice) effect; all
/// alternatives must name the same fluent.
struct DynamicLaw {
    std::vector<FluentEq> head;
    std::vector<FluentEq> condition;
    std::vector<FluentEq> precondition_fluents;
    std::vector<std::string> precondition_actions;

    bool is_choice() const { return head.size() > 1; }
};

/// A complete state: one value per fluent, keyed by fluent name.
using Valuation = std::map<std::string, std::string>;

/// A BC+-subset action description: multi-valued fluents, boolean action
/// occurrences, static and fluent dynamic laws, and the initial/goal
/// conditions of the planning task. `never` conditions are forbidden
/// state patterns enforced at every time step of the translation.
struct ActionDescription {
    std::vector<FluentConstant> fluents;
    std::vector<ActionConstant> actions;
    std::vector<StaticLaw> static_laws;
    std::vector<DynamicLaw> dynamic_laws;
    std::vector<FluentEq> initial_condition;
    std::vector<FluentEq> goal_condition;
    std::vector<std::vector<FluentEq>> never_conditions;

    const FluentConstant* find_fluent(std::string_view name) const;
    const ActionConstant* find_action(std::string_view name) const;

    /// A fluent is statically determined when it heads a static law; such
    /// fluents get no initial choice in the translation and may not head
    /// dynamic laws.
    bool statically_determined(std::string_view fluent) const;

    /// Checks the structural invariants: at least one fluent, unique
    /// constant names, non-empty distinct value domains, all law and
    /// condition references declared and in-domain, choice heads over one
    /// fluent with at least two distinct alternatives, dynamic heads
    /// regular. Throws ValidationError (or a subclass) on violation.
    void validate() const;
};

/// Renders a complete valuation as "f1=v1;f2=v2" in fluent declaration
/// order; this is the canonical state string used by trajectories, Q-tables
/// and the CSV outputs. For the single-fluent grid domain it is "at=(x,y)".
std::string format_state(const ActionDescription& d, const Valuation& v);

/// Inverse of format_state; throws ValidationError on unknown fluents,
/// missing fluents, or out-of-domain values.
Valuation parse_state(const ActionDescription& d, std::string_view text);

} // namespace asprl::lang

#endif
