#ifndef ASPRL_ASP_SOLVER_HPP
#define ASPRL_ASP_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "asprl/asp/program.hpp"

namespace asprl::asp {

class NotPositive : public Error {
public:
    using Error::Error;
};

/// Rewrites every choice rule into normal rules over fresh complement atoms
/// plus integrity constraints enforcing the cardinality bounds. Original
/// atoms keep their ids; auxiliary atoms are appended after them, so the
/// stable models of the result, projected onto the first
/// `input.atom_count()` atoms, are exactly the stable models of the input.
/// Bounds are expanded combinatorially, which is intended for the short
/// candidate lists produced by the action-language translation.
Program normalize_choices(const Program& program);

/// Gelfond-Lifschitz reduct of a choice-free program with respect to `model`:
/// rules with a negated literal whose atom is in `model` are dropped, all
/// other rules keep only their positive body. Constraints are reduced the
/// same way so that violations stay detectable in the reduct.
Program reduct(const Program& program, const Interpretation& model);

struct LeastModelResult {
    Interpretation model;
    /// True when some constraint body is contained in the least model.
    bool constraint_violated = false;
};

/// Least model of a positive program (no negation, no choice rules) by
/// fixpoint iteration. Throws NotPositive otherwise.
LeastModelResult least_model(const Program& program);

/// Whether `candidate` is a stable model of the choice-free `program`:
/// the least model of the reduct must equal `candidate` and violate no
/// constraint.
bool is_stable(const Program& program, const Interpretation& candidate);

/// Whether the positive dependency graph (rule head -> positive body atoms)
/// of a choice-free program is acyclic. For tight programs the solver can
/// skip the per-model stability check: supported models coincide with
/// stable models.
bool is_tight(const Program& program);

/// Enumerates stable models. Choice rules are normalized away internally and
/// models are projected onto the input's atoms. Models are returned sorted
/// lexicographically by atom id; enumeration stops after `max_models`
/// distinct models when a cap is given. The search itself is chronological
/// backtracking over a fixed ascending atom order with counter-based
/// propagation (forward firing, falsification of unsupported atoms,
/// constraint and head-false units), which keeps only supported candidates.
std::vector<Interpretation> solve(const Program& program,
                                  std::optional<std::size_t> max_models = std::nullopt);

} // namespace asprl::asp

#endif
