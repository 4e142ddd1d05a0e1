#ifndef ASPRL_EXP_HARNESS_HPP
#define ASPRL_EXP_HARNESS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asprl/exp/config.hpp"
#include "asprl/mdp/reduced.hpp"

namespace asprl::exp {

struct EpisodeStat {
    int session = 0;
    AlgoKind algo = AlgoKind::q;
    int episode = 0;
    int steps = 0;
    double return_ = 0.0;
    double rmsd = 0.0;
};

/// Everything sessions share read-only: the two maps, the enumerated ASP
/// supports per phase (absent plus a note when no plan exists), and the
/// full-support stand-in the baselines learn over.
struct SituationPlan {
    std::optional<mdp::ReducedMdp> asp_before;
    std::optional<mdp::ReducedMdp> asp_after;
    std::string asp_note;
    mdp::ReducedMdp baseline;
};

/// Enumerates both phases (resolving auto slack as 2 * m* per phase) and
/// builds the baseline support. NoFeasiblePolicy is captured into the plan
/// rather than thrown: baselines can still run, and the caller reports it.
SituationPlan build_plan(const ExperimentConfig& cfg);

struct SessionResult {
    std::vector<EpisodeStat> rows;
    /// Set when an ASP arm could not get (or keep) a plan; rows then stop
    /// at the point learning became impossible.
    bool no_feasible = false;
};

/// One session of one arm: seed = cfg.seed + session, fresh table merged
/// from the phase-1 support, the map switched before episode change_at with
/// (for ASP arms) a merge_q carry-over; one row per completed episode.
SessionResult run_session(const ExperimentConfig& cfg, const SituationPlan& plan, AlgoKind algo,
                          int session);

struct ExperimentResult {
    std::vector<EpisodeStat> rows;
    bool no_feasible = false;
    std::vector<std::string> notes;
};

/// All sessions of all configured arms, up to cfg.jobs of them in worker
/// threads; rows come back in (session, configured-arm order, episode)
/// order no matter how execution interleaved.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// CSV with header `session,episode,algorithm,situation,steps,return,rmsd`.
void write_csv(std::ostream& out, const ExperimentConfig& cfg,
               const std::vector<EpisodeStat>& rows);

/// Per-arm means of steps and return over the 100 episodes before and
/// after the change, pooled across sessions.
std::string summarize(const ExperimentConfig& cfg, const ExperimentResult& result);

} // namespace asprl::exp

#endif
