#ifndef ASPRL_EXP_METRICS_HPP
#define ASPRL_EXP_METRICS_HPP

#include "asprl/mdp/qtable.hpp"

namespace asprl::exp {

/// Root-mean-square deviation between two tables over the union of their
/// keys; a key missing on one side reads as the other side's recorded init
/// value, which keeps the metric total across support changes. Throws
/// EmptyTables when the union is empty.
double rmsd(const mdp::QTable& a, const mdp::QTable& b);

/// The same deviation between `q` now and `q` when its journal was opened,
/// computed from journaled pre-values without a table copy. Valid while the
/// key set only grew since then (true within a learning phase).
double rmsd_journaled(const mdp::QTable& q);

} // namespace asprl::exp

#endif
