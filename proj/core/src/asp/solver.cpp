#include "asprl/asp/solver.hpp"

#include <algorithm>
#include <set>

namespace asprl::asp {

namespace {

void require_choice_free(const Program& program, const char* op) {
    if (program.has_choice_rules()) {
        throw Error(std::string(op) + " requires a choice-free program; run normalize_choices first");
    }
}

} // namespace

Program reduct(const Program& program, const Interpretation& model) {
    require_choice_free(program, "reduct");
    Program out;
    for (AtomId id = 0; id < program.atom_count(); ++id) {
        out.add_atom(program.atom_name(id));
    }
    for (const Rule& rule : program.rules()) {
        bool blocked = false;
        std::vector<Literal> positive;
        for (const Literal& lit : rule.body) {
            if (lit.negated) {
                if (contains(model, lit.atom)) {
                    blocked = true;
                    break;
                }
            } else {
                positive.push_back(lit);
            }
        }
        if (blocked) {
            continue;
        }
        if (rule.is_constraint()) {
            out.add_rule(Rule::constraint(std::move(positive)));
        } else {
            out.add_rule(Rule::normal(rule.head_atom(), std::move(positive)));
        }
    }
    return out;
}

LeastModelResult least_model(const Program& program) {
    require_choice_free(program, "least_model");
    std::size_t n = program.atom_count();
    const std::vector<Rule>& rules = program.rules();

    // Counter-based fixpoint: a rule fires once all its body atoms are
    // derived; firing derives the head and decrements dependants.
    std::vector<int> pending(rules.size());
    std::vector<std::vector<std::uint32_t>> occurrences(n);
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        const Rule& rule = rules[r];
        for (const Literal& lit : rule.body) {
            if (lit.negated) {
                throw NotPositive("least_model requires a negation-free program");
            }
            occurrences[lit.atom].push_back(r);
        }
        pending[r] = static_cast<int>(rule.body.size());
    }

    std::vector<char> derived(n, 0);
    bool violated = false;
    std::vector<AtomId> queue;

    auto fire = [&](std::uint32_t r) {
        const Rule& rule = rules[r];
        if (rule.is_constraint()) {
            violated = true;
        } else if (!derived[rule.head_atom()]) {
            derived[rule.head_atom()] = 1;
            queue.push_back(rule.head_atom());
        }
    };

    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        if (pending[r] == 0) {
            fire(r);
        }
    }
    while (!queue.empty()) {
        AtomId atom = queue.back();
        queue.pop_back();
        for (std::uint32_t r : occurrences[atom]) {
            if (--pending[r] == 0) {
                fire(r);
            }
        }
    }

    LeastModelResult result;
    result.constraint_violated = violated;
    for (AtomId id = 0; id < n; ++id) {
        if (derived[id]) {
            result.model.push_back(id);
        }
    }
    return result;
}

bool is_stable(const Program& program, const Interpretation& candidate) {
    require_choice_free(program, "is_stable");
    LeastModelResult lm = least_model(reduct(program, candidate));
    return !lm.constraint_violated && lm.model == candidate;
}

bool is_tight(const Program& program) {
    require_choice_free(program, "is_tight");
    std::size_t n = program.atom_count();
    std::vector<std::vector<AtomId>> edges(n);
    for (const Rule& rule : program.rules()) {
        if (!rule.is_normal()) {
            continue;
        }
        for (const Literal& lit : rule.body) {
            if (!lit.negated) {
                edges[rule.head_atom()].push_back(lit.atom);
            }
        }
    }
    // Iterative three-colour DFS for a cycle in the positive dependency graph.
    enum : char { white, grey, black };
    std::vector<char> colour(n, white);
    std::vector<std::pair<AtomId, std::size_t>> stack;
    for (AtomId root = 0; root < n; ++root) {
        if (colour[root] != white) {
            continue;
        }
        colour[root] = grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < edges[node].size()) {
                AtomId child = edges[node][next++];
                if (colour[child] == grey) {
                    return false;
                }
                if (colour[child] == white) {
                    colour[child] = grey;
                    stack.emplace_back(child, 0);
                }
            } else {
                colour[node] = black;
                stack.pop_back();
            }
        }
    }
    return true;
}

namespace {

// Chronological backtracking search over supported assignments. Rules carry
// two counters (undecided body literals, false body literals); atoms carry a
// support counter (head rules whose body is not yet false). Propagation:
//
//   - a satisfied body fires its head (or conflicts for a constraint),
//   - an atom whose support drops to zero is falsified,
//   - a unit constraint, or a unit rule with a false head, falsifies its
//     remaining literal,
//   - assigning true to an unsupported atom, or satisfying the body of a
//     false-headed rule, conflicts.
//
// Every conflict-free total assignment is then a supported classical model.
// For tight programs those are exactly the stable models; otherwise each
// candidate goes through the reduct check.
class Search {
public:
    explicit Search(const Program& program) : program_(program) {
        build();
    }

    std::vector<Interpretation> run(std::size_t project_count,
                                    std::optional<std::size_t> max_models) {
        std::set<Interpretation> models;
        if (max_models && *max_models == 0) {
            return {};
        }
        bool tight = is_tight(program_);
        if (!propagate()) {
            if (!resolve_conflict()) {
                return {};
            }
        }
        for (;;) {
            while (cursor_ < value_.size() && value_[cursor_] != undef) {
                ++cursor_;
            }
            if (cursor_ == value_.size()) {
                if (tight || stable_leaf()) {
                    models.insert(project(project_count));
                    if (max_models && models.size() >= *max_models) {
                        break;
                    }
                }
                if (!resolve_conflict()) {
                    break;
                }
                continue;
            }
            AtomId var = static_cast<AtomId>(cursor_);
            decisions_.push_back({var, static_cast<std::uint32_t>(trail_.size()),
                                  static_cast<std::uint32_t>(cursor_), false});
            enqueue(var, tval);
            if (!propagate()) {
                if (!resolve_conflict()) {
                    break;
                }
            }
        }
        return {models.begin(), models.end()};
    }

private:
    static constexpr char undef = 0;
    static constexpr char tval = 1;
    static constexpr char fval = 2;

    struct RuleInfo {
        std::int32_t head;      // -1 for a constraint
        std::uint32_t body_begin;
        std::uint32_t body_size;
        std::int32_t undecided;
        std::int32_t false_lits;
    };

    struct Decision {
        AtomId var;
        std::uint32_t trail_size;
        std::uint32_t cursor;
        bool tried_false;
    };

    const Program& program_;
    std::vector<RuleInfo> rules_;
    std::vector<std::uint32_t> body_;        // atom << 1 | negated
    std::vector<std::uint32_t> occ_offset_;  // per atom, into occ_
    std::vector<std::uint32_t> occ_;         // rule << 1 | negated occurrence
    std::vector<std::uint32_t> head_offset_; // per atom, into head_rules_
    std::vector<std::uint32_t> head_rules_;
    std::vector<char> value_;
    std::vector<std::int32_t> support_;
    std::vector<AtomId> trail_;
    std::vector<std::uint32_t> queue_; // atom << 1 | (value == fval)
    std::size_t queue_head_ = 0;
    std::vector<Decision> decisions_;
    std::size_t cursor_ = 0;
    bool root_conflict_ = false;

    void build() {
        std::size_t n = program_.atom_count();
        value_.assign(n, undef);
        support_.assign(n, 0);

        const std::vector<Rule>& rules = program_.rules();
        rules_.reserve(rules.size());
        std::vector<std::uint32_t> occ_count(n, 0);
        std::vector<std::uint32_t> head_count(n, 0);
        for (const Rule& rule : rules) {
            RuleInfo info;
            info.head = rule.is_constraint() ? -1 : static_cast<std::int32_t>(rule.head_atom());
            info.body_begin = static_cast<std::uint32_t>(body_.size());
            info.body_size = static_cast<std::uint32_t>(rule.body.size());
            info.undecided = static_cast<std::int32_t>(rule.body.size());
            info.false_lits = 0;
            for (const Literal& lit : rule.body) {
                body_.push_back(lit.atom << 1 | (lit.negated ? 1u : 0u));
                ++occ_count[lit.atom];
            }
            if (info.head >= 0) {
                ++support_[info.head];
                ++head_count[info.head];
            }
            rules_.push_back(info);
        }

        occ_offset_.assign(n + 1, 0);
        head_offset_.assign(n + 1, 0);
        for (std::size_t a = 0; a < n; ++a) {
            occ_offset_[a + 1] = occ_offset_[a] + occ_count[a];
            head_offset_[a + 1] = head_offset_[a] + head_count[a];
        }
        occ_.resize(body_.size());
        head_rules_.resize(head_offset_[n]);
        std::vector<std::uint32_t> occ_fill(occ_offset_.begin(), occ_offset_.end() - 1);
        std::vector<std::uint32_t> head_fill(head_offset_.begin(), head_offset_.end() - 1);
        for (std::uint32_t r = 0; r < rules_.size(); ++r) {
            const RuleInfo& info = rules_[r];
            for (std::uint32_t i = 0; i < info.body_size; ++i) {
                std::uint32_t encoded = body_[info.body_begin + i];
                occ_[occ_fill[encoded >> 1]++] = r << 1 | (encoded & 1u);
            }
            if (info.head >= 0) {
                head_rules_[head_fill[info.head]++] = r;
            }
        }

        // Root consequences: empty bodies fire, unsupported atoms are false.
        for (std::uint32_t r = 0; r < rules_.size(); ++r) {
            if (rules_[r].body_size == 0) {
                if (rules_[r].head < 0) {
                    root_conflict_ = true;
                } else {
                    enqueue(static_cast<AtomId>(rules_[r].head), tval);
                }
            }
        }
        for (AtomId a = 0; a < n; ++a) {
            if (support_[a] == 0) {
                enqueue(a, fval);
            }
        }
    }

    void enqueue(AtomId atom, char val) {
        queue_.push_back(atom << 1 | (val == fval ? 1u : 0u));
    }

    // Processes pending assignments. Returns false on conflict, with the
    // queue drained; counters always reflect exactly the trail.
    bool propagate() {
        if (root_conflict_) {
            queue_.clear();
            queue_head_ = 0;
            return false;
        }
        while (queue_head_ < queue_.size()) {
            std::uint32_t encoded = queue_[queue_head_++];
            AtomId atom = encoded >> 1;
            char val = (encoded & 1u) ? fval : tval;
            if (value_[atom] != undef) {
                if (value_[atom] != val) {
                    clear_queue();
                    return false;
                }
                continue;
            }
            if (!assign(atom, val)) {
                clear_queue();
                return false;
            }
        }
        queue_.clear();
        queue_head_ = 0;
        return true;
    }

    void clear_queue() {
        queue_.clear();
        queue_head_ = 0;
    }

    // Counter updates run to completion even after a conflict is found, so
    // that unassign() can undo them uniformly.
    bool assign(AtomId atom, char val) {
        value_[atom] = val;
        trail_.push_back(atom);
        bool ok = true;

        if (val == tval && support_[atom] == 0) {
            ok = false;
        }
        if (val == fval) {
            for (std::uint32_t i = head_offset_[atom]; ok && i < head_offset_[atom + 1]; ++i) {
                const RuleInfo& rule = rules_[head_rules_[i]];
                if (rule.false_lits == 0) {
                    if (rule.undecided == 0) {
                        ok = false;
                    } else if (rule.undecided == 1) {
                        falsify_remaining(head_rules_[i]);
                    }
                }
            }
        }

        for (std::uint32_t i = occ_offset_[atom]; i < occ_offset_[atom + 1]; ++i) {
            std::uint32_t encoded = occ_[i];
            std::uint32_t r = encoded >> 1;
            bool negated = (encoded & 1u) != 0;
            bool lit_true = (val == tval) != negated;
            RuleInfo& rule = rules_[r];
            --rule.undecided;
            if (!lit_true) {
                if (++rule.false_lits == 1 && rule.head >= 0) {
                    std::int32_t head = rule.head;
                    if (--support_[head] == 0) {
                        if (value_[head] == tval) {
                            ok = false;
                        } else if (value_[head] == undef) {
                            enqueue(static_cast<AtomId>(head), fval);
                        }
                    }
                }
                continue;
            }
            if (!ok || rule.false_lits != 0) {
                continue;
            }
            if (rule.undecided == 0) {
                if (rule.head < 0 || value_[rule.head] == fval) {
                    ok = false;
                } else if (value_[rule.head] == undef) {
                    enqueue(static_cast<AtomId>(rule.head), tval);
                }
            } else if (rule.undecided == 1) {
                if (rule.head < 0 || value_[rule.head] == fval) {
                    falsify_remaining(r);
                }
            }
        }
        return ok;
    }

    // Enqueues the complement of the single undecided literal of rule `r`.
    void falsify_remaining(std::uint32_t r) {
        const RuleInfo& rule = rules_[r];
        for (std::uint32_t i = 0; i < rule.body_size; ++i) {
            std::uint32_t encoded = body_[rule.body_begin + i];
            AtomId atom = encoded >> 1;
            if (value_[atom] != undef) {
                continue;
            }
            bool negated = (encoded & 1u) != 0;
            enqueue(atom, negated ? tval : fval);
            return;
        }
    }

    void unassign(AtomId atom) {
        char val = value_[atom];
        value_[atom] = undef;
        for (std::uint32_t i = occ_offset_[atom]; i < occ_offset_[atom + 1]; ++i) {
            std::uint32_t encoded = occ_[i];
            RuleInfo& rule = rules_[encoded >> 1];
            bool negated = (encoded & 1u) != 0;
            bool lit_true = (val == tval) != negated;
            ++rule.undecided;
            if (!lit_true && --rule.false_lits == 0 && rule.head >= 0) {
                ++support_[rule.head];
            }
        }
    }

    void undo_to(std::uint32_t trail_size) {
        while (trail_.size() > trail_size) {
            unassign(trail_.back());
            trail_.pop_back();
        }
    }

    // Backtracks after a conflict (or a recorded model): flips the deepest
    // decision still having an untried value, popping exhausted levels.
    bool resolve_conflict() {
        while (!decisions_.empty()) {
            Decision& d = decisions_.back();
            undo_to(d.trail_size);
            cursor_ = d.cursor;
            if (d.tried_false) {
                decisions_.pop_back();
                continue;
            }
            d.tried_false = true;
            enqueue(d.var, fval);
            if (propagate()) {
                return true;
            }
        }
        return false;
    }

    // Reduct-based stability check for a total conflict-free assignment;
    // only reached for non-tight programs.
    bool stable_leaf() const {
        Interpretation model;
        for (AtomId a = 0; a < value_.size(); ++a) {
            if (value_[a] == tval) {
                model.push_back(a);
            }
        }
        return is_stable(program_, model);
    }

    Interpretation project(std::size_t project_count) const {
        Interpretation model;
        for (AtomId a = 0; a < project_count; ++a) {
            if (value_[a] == tval) {
                model.push_back(a);
            }
        }
        return model;
    }
};

} // namespace

std::vector<Interpretation> solve(const Program& program,
                                  std::optional<std::size_t> max_models) {
    const Program* target = &program;
    std::optional<Program> normalized;
    if (program.has_choice_rules()) {
        normalized.emplace(normalize_choices(program));
        target = &*normalized;
    }
    Search search(*target);
    return search.run(program.atom_count(), max_models);
}

} // namespace asprl::asp
