#include "asprl/asp/solver.hpp"

namespace asprl::asp {

namespace {

AtomId fresh_complement(Program& out, const std::string& base) {
    std::string name = base + "'";
    while (out.find_atom(name)) {
        name.push_back('\'');
    }
    return out.add_atom(name);
}

// Calls `emit` with every size-r subset of `atoms`.
template <typename Fn>
void for_each_subset(const std::vector<AtomId>& atoms, std::size_t r, Fn emit) {
    std::vector<std::size_t> index(r);
    for (std::size_t i = 0; i < r; ++i) {
        index[i] = i;
    }
    std::vector<AtomId> subset(r);
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) {
            subset[i] = atoms[index[i]];
        }
        emit(subset);
        std::size_t i = r;
        while (i > 0 && index[i - 1] == atoms.size() - r + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++index[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            index[j] = index[j - 1] + 1;
        }
    }
}

} // namespace

Program normalize_choices(const Program& program) {
    Program out;
    for (AtomId id = 0; id < program.atom_count(); ++id) {
        out.add_atom(program.atom_name(id));
    }
    for (const Rule& rule : program.rules()) {
        if (!rule.is_choice()) {
            out.add_rule(rule);
            continue;
        }
        const ChoiceHead& head = rule.choice();
        const std::vector<Literal>& body = rule.body;
        for (AtomId candidate : head.candidates) {
            AtomId complement = fresh_complement(out, program.atom_name(candidate));
            std::vector<Literal> pick = body;
            pick.push_back(neg(complement));
            out.add_rule(Rule::normal(candidate, std::move(pick)));
            std::vector<Literal> skip = body;
            skip.push_back(neg(candidate));
            out.add_rule(Rule::normal(complement, std::move(skip)));
        }
        int count = static_cast<int>(head.candidates.size());
        if (head.lower > 0) {
            // Fewer than `lower` candidates true means some
            // (count - lower + 1)-subset is entirely false.
            auto r = static_cast<std::size_t>(count - head.lower + 1);
            for_each_subset(head.candidates, r, [&](const std::vector<AtomId>& subset) {
                std::vector<Literal> violated = body;
                for (AtomId atom : subset) {
                    violated.push_back(neg(atom));
                }
                out.add_rule(Rule::constraint(std::move(violated)));
            });
        }
        if (head.upper < count) {
            // More than `upper` candidates true means some
            // (upper + 1)-subset is entirely true.
            auto r = static_cast<std::size_t>(head.upper + 1);
            for_each_subset(head.candidates, r, [&](const std::vector<AtomId>& subset) {
                std::vector<Literal> violated = body;
                for (AtomId atom : subset) {
                    violated.push_back(pos(atom));
                }
                out.add_rule(Rule::constraint(std::move(violated)));
            });
        }
    }
    return out;
}

} // namespace asprl::asp
