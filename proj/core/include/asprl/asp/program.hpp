#ifndef ASPRL_ASP_PROGRAM_HPP
#define ASPRL_ASP_PROGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asprl/errors.hpp"
#include "asprl/symbols.hpp"

namespace asprl::asp {

using AtomId = SymbolTable::Id;

/// An atom or its default negation.
struct Literal {
    AtomId atom;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(AtomId atom) { return Literal{atom, false}; }
inline Literal neg(AtomId atom) { return Literal{atom, true}; }

/// Head of a cardinality choice rule: lower { candidates } upper.
struct ChoiceHead {
    int lower = 0;
    int upper = 0;
    std::vector<AtomId> candidates;
};

/// A rule is one of
///   normal rule        a :- body.        (head holds an AtomId)
///   integrity constraint :- body.        (head is monostate)
///   choice rule        l { c1; ...; ck } u :- body.
struct Rule {
    std::variant<std::monostate, AtomId, ChoiceHead> head;
    std::vector<Literal> body;

    bool is_constraint() const { return std::holds_alternative<std::monostate>(head); }
    bool is_normal() const { return std::holds_alternative<AtomId>(head); }
    bool is_choice() const { return std::holds_alternative<ChoiceHead>(head); }

    AtomId head_atom() const { return std::get<AtomId>(head); }
    const ChoiceHead& choice() const { return std::get<ChoiceHead>(head); }

    static Rule fact(AtomId atom) { return Rule{atom, {}}; }
    static Rule normal(AtomId atom, std::vector<Literal> body) {
        return Rule{atom, std::move(body)};
    }
    static Rule constraint(std::vector<Literal> body) {
        return Rule{std::monostate{}, std::move(body)};
    }
    static Rule choice_rule(int lower, int upper, std::vector<AtomId> candidates,
                            std::vector<Literal> body = {}) {
        return Rule{ChoiceHead{lower, upper, std::move(candidates)}, std::move(body)};
    }
};

class ChoiceBoundsInvalid : public Error {
public:
    using Error::Error;
};

/// A ground logic program: an atom table plus a rule list. Atom ids are dense
/// and ordered by first insertion, which fixes the iteration order everywhere
/// downstream (models, branching, serialization).
class Program {
public:
    AtomId add_atom(std::string_view name) { return atoms_.intern(name); }
    std::optional<AtomId> find_atom(std::string_view name) const { return atoms_.find(name); }
    const std::string& atom_name(AtomId id) const { return atoms_.name(id); }
    std::size_t atom_count() const { return atoms_.size(); }

    /// Validates atom ids and choice bounds, then appends the rule.
    /// Choice bounds must satisfy 0 <= lower <= upper <= #candidates and the
    /// candidate list must be non-empty and duplicate-free.
    void add_rule(Rule rule);

    const std::vector<Rule>& rules() const { return rules_; }
    bool has_choice_rules() const { return choice_rule_count_ > 0; }

private:
    SymbolTable atoms_;
    std::vector<Rule> rules_;
    std::size_t choice_rule_count_ = 0;
};

/// A set of atoms taken to be true, as a sorted duplicate-free id vector.
using Interpretation = std::vector<AtomId>;

/// Binary search in a sorted interpretation.
bool contains(const Interpretation& interpretation, AtomId atom);

/// Sorts and deduplicates `atoms` into a valid Interpretation.
Interpretation make_interpretation(std::vector<AtomId> atoms);

} // namespace asprl::asp

#endif
