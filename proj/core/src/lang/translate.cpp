#include "asprl/lang/translate.hpp"

#include <numeric>
#include <string>

namespace asprl::lang {

namespace {

// Offsets of the fixed timed-atom layout. Per step i < m the block is
// [fluent values..., actions...]; step m has fluent values only.
struct Layout {
    std::vector<std::size_t> fluent_offset; // per fluent, offset of value 0 within a block
    std::size_t fluent_block = 0;           // total fluent values
    std::size_t actions = 0;
    std::size_t block = 0;                  // fluent_block + actions

    explicit Layout(const ActionDescription& d) {
        fluent_offset.reserve(d.fluents.size());
        for (const FluentConstant& fluent : d.fluents) {
            fluent_offset.push_back(fluent_block);
            fluent_block += fluent.values.size();
        }
        actions = d.actions.size();
        block = fluent_block + actions;
    }

    asp::AtomId fluent_atom(int i, std::size_t fluent, std::size_t value) const {
        return static_cast<asp::AtomId>(i * block + fluent_offset[fluent] + value);
    }

    asp::AtomId action_atom(int i, std::size_t action) const {
        return static_cast<asp::AtomId>(i * block + fluent_block + action);
    }

    std::size_t total_atoms(int m) const { return m * block + fluent_block; }
};

std::string timed_name(int i, const std::string& base) {
    return std::to_string(i) + ":" + base;
}

} // namespace

asp::Program translate(const ActionDescription& d, int m) {
    if (m < 1) {
        throw HorizonInvalid("horizon must be at least 1, got " + std::to_string(m));
    }
    d.validate();

    Layout layout(d);
    asp::Program program;

    // Intern the timed atoms in layout order first; rules below reference
    // them by computed id.
    for (int i = 0; i <= m; ++i) {
        for (const FluentConstant& fluent : d.fluents) {
            for (const std::string& value : fluent.values) {
                program.add_atom(timed_name(i, fluent.name + "=" + value));
            }
        }
        if (i < m) {
            for (const ActionConstant& action : d.actions) {
                program.add_atom(timed_name(i, action.name));
            }
        }
    }

    auto fluent_index = [&](const std::string& name) {
        for (std::size_t f = 0; f < d.fluents.size(); ++f) {
            if (d.fluents[f].name == name) {
                return f;
            }
        }
        throw ValidationError("unknown fluent '" + name + "'");
    };
    auto value_index = [&](std::size_t fluent, const std::string& value) {
        const auto& values = d.fluents[fluent].values;
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (values[v] == value) {
                return v;
            }
        }
        throw ValueOutsideDomain("value '" + value + "' not in domain");
    };
    auto action_index = [&](const std::string& name) {
        for (std::size_t a = 0; a < d.actions.size(); ++a) {
            if (d.actions[a].name == name) {
                return a;
            }
        }
        throw ValidationError("unknown action '" + name + "'");
    };
    auto eq_atom = [&](int i, const FluentEq& eq) {
        std::size_t f = fluent_index(eq.fluent);
        return layout.fluent_atom(i, f, value_index(f, eq.value));
    };

    // (3) Initial-state choices for regular fluents.
    for (std::size_t f = 0; f < d.fluents.size(); ++f) {
        if (d.statically_determined(d.fluents[f].name)) {
            continue;
        }
        for (std::size_t v = 0; v < d.fluents[f].values.size(); ++v) {
            program.add_rule(asp::Rule::choice_rule(0, 1, {layout.fluent_atom(0, f, v)}));
        }
    }

    // (1) Static laws at every step 0..m.
    for (int i = 0; i <= m; ++i) {
        for (const StaticLaw& law : d.static_laws) {
            std::vector<asp::Literal> body;
            body.reserve(law.condition.size());
            for (const FluentEq& eq : law.condition) {
                body.push_back(asp::pos(eq_atom(i, eq)));
            }
            program.add_rule(asp::Rule::normal(eq_atom(i, law.head), std::move(body)));
        }
    }

    // (2) Dynamic laws for steps 0..m-1.
    for (int i = 0; i < m; ++i) {
        for (const DynamicLaw& law : d.dynamic_laws) {
            std::vector<asp::Literal> body;
            body.reserve(law.condition.size() + law.precondition_fluents.size() +
                         law.precondition_actions.size());
            for (const FluentEq& eq : law.condition) {
                body.push_back(asp::pos(eq_atom(i + 1, eq)));
            }
            for (const FluentEq& eq : law.precondition_fluents) {
                body.push_back(asp::pos(eq_atom(i, eq)));
            }
            for (const std::string& action : law.precondition_actions) {
                body.push_back(asp::pos(layout.action_atom(i, action_index(action))));
            }
            if (!law.is_choice()) {
                program.add_rule(asp::Rule::normal(eq_atom(i + 1, law.head[0]), std::move(body)));
            } else {
                std::vector<asp::AtomId> candidates;
                candidates.reserve(law.head.size());
                for (const FluentEq& alt : law.head) {
                    candidates.push_back(eq_atom(i + 1, alt));
                }
                program.add_rule(
                    asp::Rule::choice_rule(1, 1, std::move(candidates), std::move(body)));
            }
        }
    }

    // (4a) Exactly one action per step.
    if (!d.actions.empty()) {
        for (int i = 0; i < m; ++i) {
            std::vector<asp::AtomId> candidates;
            candidates.reserve(d.actions.size());
            for (std::size_t a = 0; a < d.actions.size(); ++a) {
                candidates.push_back(layout.action_atom(i, a));
            }
            program.add_rule(asp::Rule::choice_rule(1, 1, std::move(candidates)));
        }
    }

    // (4b) Exactly one value per fluent per step.
    for (int i = 0; i <= m; ++i) {
        for (std::size_t f = 0; f < d.fluents.size(); ++f) {
            std::size_t k = d.fluents[f].values.size();
            std::vector<asp::Literal> none;
            none.reserve(k);
            for (std::size_t v = 0; v < k; ++v) {
                none.push_back(asp::neg(layout.fluent_atom(i, f, v)));
            }
            program.add_rule(asp::Rule::constraint(std::move(none)));
            for (std::size_t v = 0; v < k; ++v) {
                for (std::size_t w = v + 1; w < k; ++w) {
                    program.add_rule(asp::Rule::constraint(
                        {asp::pos(layout.fluent_atom(i, f, v)),
                         asp::pos(layout.fluent_atom(i, f, w))}));
                }
            }
        }
    }

    // (5) Forbidden conjunctions at every step.
    for (int i = 0; i <= m; ++i) {
        for (const std::vector<FluentEq>& conj : d.never_conditions) {
            std::vector<asp::Literal> body;
            body.reserve(conj.size());
            for (const FluentEq& eq : conj) {
                body.push_back(asp::pos(eq_atom(i, eq)));
            }
            program.add_rule(asp::Rule::constraint(std::move(body)));
        }
    }

    // (6) Initial condition at step 0, goal condition at step m.
    for (const FluentEq& eq : d.initial_condition) {
        program.add_rule(asp::Rule::constraint({asp::neg(eq_atom(0, eq))}));
    }
    for (const FluentEq& eq : d.goal_condition) {
        program.add_rule(asp::Rule::constraint({asp::neg(eq_atom(m, eq))}));
    }

    return program;
}

namespace {

mdp::Trajectory extract_impl(const asp::Interpretation& model, const ActionDescription& d, int m,
                             std::shared_ptr<mdp::Vocab> vocab) {
    if (m < 1) {
        throw HorizonInvalid("horizon must be at least 1, got " + std::to_string(m));
    }
    Layout layout(d);
    std::size_t total = layout.total_atoms(m);

    // Per step: the chosen value index per fluent, and the action index.
    std::vector<std::vector<int>> values(m + 1, std::vector<int>(d.fluents.size(), -1));
    std::vector<int> actions(m, -1);

    for (asp::AtomId atom : model) {
        if (atom >= total) {
            throw MalformedModel("model contains an atom outside the translation layout");
        }
        int step = static_cast<int>(atom / layout.block);
        std::size_t offset = atom % layout.block;
        if (offset < layout.fluent_block) {
            std::size_t f = d.fluents.size() - 1;
            while (layout.fluent_offset[f] > offset) {
                --f;
            }
            int v = static_cast<int>(offset - layout.fluent_offset[f]);
            if (values[step][f] != -1) {
                throw MalformedModel("step " + std::to_string(step) +
                                     " assigns two values to fluent '" + d.fluents[f].name + "'");
            }
            values[step][f] = v;
        } else {
            std::size_t a = offset - layout.fluent_block;
            if (actions[step] != -1) {
                throw MalformedModel("step " + std::to_string(step) + " has two actions");
            }
            actions[step] = static_cast<int>(a);
        }
    }

    mdp::Trajectory trajectory;
    for (int i = 0; i <= m; ++i) {
        Valuation valuation;
        for (std::size_t f = 0; f < d.fluents.size(); ++f) {
            if (values[i][f] < 0) {
                throw MalformedModel("step " + std::to_string(i) + " lacks a value for fluent '" +
                                     d.fluents[f].name + "'");
            }
            valuation[d.fluents[f].name] = d.fluents[f].values[values[i][f]];
        }
        trajectory.state_ids.push_back(vocab->states.intern(format_state(d, valuation)));
    }
    for (int i = 0; i < m; ++i) {
        if (actions[i] < 0) {
            throw MalformedModel("step " + std::to_string(i) + " lacks an action");
        }
        trajectory.action_ids.push_back(vocab->actions.intern(d.actions[actions[i]].name));
    }
    trajectory.vocab = std::move(vocab);
    return trajectory;
}

} // namespace

mdp::Trajectory extract_trajectory(const asp::Interpretation& model, const ActionDescription& d,
                                   int m) {
    return extract_impl(model, d, m, std::make_shared<mdp::Vocab>());
}

mdp::Trajectory extract_trajectory(const asp::Interpretation& model, const ActionDescription& d,
                                   int m, const std::shared_ptr<mdp::Vocab>& vocab) {
    return extract_impl(model, d, m, vocab);
}

} // namespace asprl::lang
