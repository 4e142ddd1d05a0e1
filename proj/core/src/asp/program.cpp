#include "asprl/asp/program.hpp"

#include <algorithm>
#include <unordered_set>

namespace asprl::asp {

namespace {

void check_atom(const Program& program, AtomId atom) {
    if (atom >= program.atom_count()) {
        throw Error("rule references unknown atom id " + std::to_string(atom));
    }
}

} // namespace

void Program::add_rule(Rule rule) {
    for (const Literal& lit : rule.body) {
        check_atom(*this, lit.atom);
    }
    if (rule.is_normal()) {
        check_atom(*this, rule.head_atom());
    } else if (rule.is_choice()) {
        const ChoiceHead& head = rule.choice();
        if (head.candidates.empty()) {
            throw ChoiceBoundsInvalid("choice rule with empty candidate list");
        }
        std::unordered_set<AtomId> seen;
        for (AtomId atom : head.candidates) {
            check_atom(*this, atom);
            if (!seen.insert(atom).second) {
                throw ChoiceBoundsInvalid("duplicate candidate in choice rule: " +
                                          atom_name(atom));
            }
        }
        int count = static_cast<int>(head.candidates.size());
        if (head.lower < 0 || head.lower > head.upper || head.upper > count) {
            throw ChoiceBoundsInvalid(
                "choice bounds must satisfy 0 <= lower <= upper <= #candidates, got " +
                std::to_string(head.lower) + " { " + std::to_string(count) + " } " +
                std::to_string(head.upper));
        }
        ++choice_rule_count_;
    }
    rules_.push_back(std::move(rule));
}

bool contains(const Interpretation& interpretation, AtomId atom) {
    return std::binary_search(interpretation.begin(), interpretation.end(), atom);
}

Interpretation make_interpretation(std::vector<AtomId> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

} // namespace asprl::asp
