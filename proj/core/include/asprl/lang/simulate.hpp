#ifndef ASPRL_LANG_SIMULATE_HPP
#define ASPRL_LANG_SIMULATE_HPP

#include <string>
#include <vector>

#include "asprl/lang/domain.hpp"

namespace asprl::lang {

/// True when every equality of `cond` holds in `s`.
bool satisfies(const Valuation& s, const std::vector<FluentEq>& cond);

/// All complete valuations that qualify as states of the transition system:
/// static laws hold, every statically determined fluent carries a value
/// derivable from the regular fluents, and no `never` conjunction applies.
///
/// Enumerates the product of the fluent domains, so this is meant for the
/// small ground domains the toolkit works with.
std::vector<Valuation> legal_states(const ActionDescription& d);

/// Successor states of executing action `a` in state `s`. A candidate s'
/// qualifies when
///   - every static law and every fired dynamic law is satisfied in s'
///     (a fired nondeterministic law contributes exactly one alternative),
///   - no `never` conjunction holds in s', and
///   - every fluent value of s' is caused: the heads contributed by fired
///     dynamic laws, closed under the static laws, reproduce s' exactly.
/// A dynamic law fires when its preconditions hold in `s`, its action
/// atoms match `a`, and its next-state condition holds in s'.
std::vector<Valuation> successors(const ActionDescription& d, const Valuation& s,
                                  const std::string& a);

/// Legal states satisfying the initial (resp. goal) condition.
std::vector<Valuation> initial_states(const ActionDescription& d);
std::vector<Valuation> goal_states(const ActionDescription& d);

} // namespace asprl::lang

#endif
