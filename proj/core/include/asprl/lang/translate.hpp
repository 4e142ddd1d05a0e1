#ifndef ASPRL_LANG_TRANSLATE_HPP
#define ASPRL_LANG_TRANSLATE_HPP

#include <memory>

#include "asprl/asp/program.hpp"
#include "asprl/lang/domain.hpp"
#include "asprl/mdp/trajectory.hpp"

namespace asprl::lang {

class HorizonInvalid : public Error {
public:
    using Error::Error;
};

class MalformedModel : public Error {
public:
    using Error::Error;
};

/// Builds the bounded-horizon program whose stable models are exactly the
/// length-m evolutions of `d` from an initial-condition state to a
/// goal-condition state:
///
///   - static laws instantiated at every step 0..m (including m, so derived
///     fluents are defined in the goal state),
///   - dynamic laws as rules  i+1:F <- i+1:G, i:H  for i in 0..m-1, with a
///     1{...}1 choice head for non-deterministic effects,
///   - a singleton choice {0:c=v} per regular fluent value (the initial
///     state is guessed, then filtered by the initial-condition constraint),
///   - per step: exactly one value per fluent (at-least-one plus pairwise
///     at-most-one constraints) and exactly one action (a 1{...}1 choice),
///   - `never` conjunctions forbidden at every step,
///   - the initial condition enforced at step 0 and the goal at step m.
///
/// Timed atoms are named `i:c=v` and `i:a` and are interned in a fixed
/// arithmetic layout: step blocks of all fluent values (declaration order)
/// followed by all actions, so that extract_trajectory can decode models
/// without the program. Throws HorizonInvalid if m < 1.
asp::Program translate(const ActionDescription& d, int m);

/// Decodes a stable model of translate(d, m) into the trajectory
/// s_0, a_0, s_1, ..., a_{m-1}, s_m. Throws MalformedModel when some step
/// lacks a unique complete fluent valuation or a unique action.
mdp::Trajectory extract_trajectory(const asp::Interpretation& model, const ActionDescription& d,
                                   int m);

/// As above, interning state/action names into a caller-provided vocabulary
/// (used by bulk enumeration).
mdp::Trajectory extract_trajectory(const asp::Interpretation& model, const ActionDescription& d,
                                   int m, const std::shared_ptr<mdp::Vocab>& vocab);

} // namespace asprl::lang

#endif
