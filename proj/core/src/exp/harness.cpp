#include "asprl/exp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "asprl/csv.hpp"
#include "asprl/exp/metrics.hpp"
#include "asprl/grid/domain.hpp"
#include "asprl/grid/env.hpp"
#include "asprl/mdp/enumerate.hpp"

namespace asprl::exp {

namespace {

mdp::ReducedMdp phase_support(const grid::GridMap& map, const ExperimentConfig& cfg) {
    lang::ActionDescription d = grid::as_action_description(map, map.walls, map.holes);
    int m_star = mdp::find_min_horizon(d, cfg.max_horizon);
    int slack = cfg.slack >= 0 ? cfg.slack : 2 * m_star;
    mdp::TrajectorySet h = mdp::enumerate_trajectories(d, cfg.max_horizon, slack, cfg.max_models);
    return mdp::build_reduced(h, d);
}

/// The baseline arms learn over every free cell with all four actions (the
/// goal excluded as a source, it is terminal); next states record the
/// expected resolution so the structure stays honest, though learning only
/// consumes the key set.
mdp::ReducedMdp full_support(const grid::GridMap& map) {
    mdp::ReducedMdp out;
    for (int y = 0; y < map.height; ++y) {
        for (int x = 0; x < map.width; ++x) {
            grid::Cell c{x, y};
            if (!map.is_free(c)) {
                continue;
            }
            std::string s = grid::cell_state(c);
            out.states.push_back(s);
            if (c == map.goal) {
                continue;
            }
            for (grid::Action a : grid::all_actions) {
                grid::StepOutcome expected = grid::apply_direction(map, c, a);
                out.allowed[{s, grid::action_name(a)}] = {grid::cell_state(expected.next_state)};
            }
        }
    }
    for (grid::Action a : grid::all_actions) {
        out.actions.push_back(grid::action_name(a));
    }
    std::sort(out.states.begin(), out.states.end());
    std::sort(out.actions.begin(), out.actions.end());
    out.initial_states.push_back(grid::cell_state(map.start));
    out.goal_states.push_back(grid::cell_state(map.goal));
    out.rebuild_index();
    return out;
}

void append_note(std::string& note, const std::string& add) {
    if (!note.empty()) {
        note += "; ";
    }
    note += add;
}

} // namespace

SituationPlan build_plan(const ExperimentConfig& cfg) {
    SituationPlan plan;
    bool wants_asp = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(), is_asp);
    if (wants_asp) {
        try {
            plan.asp_before = phase_support(cfg.map_before, cfg);
        } catch (const mdp::NoFeasiblePolicy& e) {
            append_note(plan.asp_note,
                        std::string("no feasible policy before the change: ") + e.what());
        }
        try {
            plan.asp_after = phase_support(cfg.map_after, cfg);
        } catch (const mdp::NoFeasiblePolicy& e) {
            append_note(plan.asp_note,
                        std::string("no feasible policy after the change: ") + e.what());
        }
    }
    plan.baseline = full_support(cfg.map_before);
    return plan;
}

SessionResult run_session(const ExperimentConfig& cfg, const SituationPlan& plan, AlgoKind algo,
                          int session) {
    SessionResult out;
    const bool asp = is_asp(algo);
    if (asp && !plan.asp_before.has_value()) {
        out.no_feasible = true;
        return out;
    }

    Rng rng(cfg.seed + static_cast<std::uint64_t>(session));
    grid::GridEnv env(cfg.map_before, grid::SlipModel{});
    const mdp::ReducedMdp* support = asp ? &*plan.asp_before : &plan.baseline;
    mdp::QTable q = mdp::merge_q(mdp::QTable{}, *support, cfg.params.init, rng);
    rl::Algo base = base_algo(algo);

    for (int episode = 0; episode < cfg.episodes; ++episode) {
        if (episode == cfg.change_at) {
            env.switch_map(cfg.map_after);
            if (asp) {
                if (!plan.asp_after.has_value()) {
                    out.no_feasible = true;
                    return out;
                }
                // The merge episode diffs against a full pre-merge snapshot,
                // so its rmsd covers the support change and the episode in
                // one number; the journal cannot see dropped keys.
                mdp::QTable snapshot = q;
                q = mdp::merge_q(q, *plan.asp_after, cfg.params.init, rng);
                support = &*plan.asp_after;
                rl::EpisodeResult r =
                    rl::run_episode(env, q, *support, cfg.params, base, cfg.step_limit, rng);
                out.rows.push_back(
                    {session, algo, episode, r.steps, r.return_, rmsd(q, snapshot)});
                continue;
            }
        }
        q.begin_journal();
        rl::EpisodeResult r =
            rl::run_episode(env, q, *support, cfg.params, base, cfg.step_limit, rng);
        out.rows.push_back({session, algo, episode, r.steps, r.return_, rmsd_journaled(q)});
        q.drop_journal();
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    SituationPlan plan = build_plan(cfg);

    const std::size_t arms = cfg.algorithms.size();
    std::vector<std::pair<int, std::size_t>> tasks;
    tasks.reserve(static_cast<std::size_t>(cfg.sessions) * arms);
    for (int session = 0; session < cfg.sessions; ++session) {
        for (std::size_t arm = 0; arm < arms; ++arm) {
            tasks.emplace_back(session, arm);
        }
    }
    std::vector<SessionResult> results(tasks.size());

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            auto [session, arm] = tasks[i];
            try {
                results[i] = run_session(cfg, plan, cfg.algorithms[arm], session);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(tasks.size());
                return;
            }
        }
    };

    int jobs = std::clamp(cfg.jobs, 1, static_cast<int>(tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ExperimentResult out;
    if (!plan.asp_note.empty()) {
        out.notes.push_back(plan.asp_note);
    }
    for (SessionResult& r : results) {
        out.no_feasible = out.no_feasible || r.no_feasible;
        out.rows.insert(out.rows.end(), r.rows.begin(), r.rows.end());
    }
    return out;
}

void write_csv(std::ostream& out, const ExperimentConfig& cfg,
               const std::vector<EpisodeStat>& rows) {
    out << "session,episode,algorithm,situation,steps,return,rmsd\n";
    for (const EpisodeStat& r : rows) {
        out << r.session << ',' << r.episode << ',' << algo_label(r.algo) << ',' << cfg.situation
            << ',' << r.steps << ',' << format_double(r.return_) << ',' << format_double(r.rmsd)
            << '\n';
    }
}

std::string summarize(const ExperimentConfig& cfg, const ExperimentResult& result) {
    struct Acc {
        double steps = 0.0;
        double return_ = 0.0;
        long n = 0;
    };
    int lo = std::max(0, cfg.change_at - 100);
    int hi = std::min(cfg.episodes, cfg.change_at + 100);
    std::map<AlgoKind, Acc> before;
    std::map<AlgoKind, Acc> after;
    for (const EpisodeStat& r : result.rows) {
        Acc* acc = nullptr;
        if (r.episode >= lo && r.episode < cfg.change_at) {
            acc = &before[r.algo];
        } else if (r.episode >= cfg.change_at && r.episode < hi) {
            acc = &after[r.algo];
        }
        if (acc != nullptr) {
            acc->steps += r.steps;
            acc->return_ += r.return_;
            ++acc->n;
        }
    }

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "windows: episodes [" << lo << "," << cfg.change_at << ") before the change, ["
       << cfg.change_at << "," << hi << ") after\n";
    for (AlgoKind kind : cfg.algorithms) {
        os << algo_label(kind) << ":";
        auto emit = [&](const char* label, const std::map<AlgoKind, Acc>& accs) {
            auto it = accs.find(kind);
            if (it == accs.end() || it->second.n == 0) {
                os << " " << label << " (no rows)";
                return;
            }
            const Acc& acc = it->second;
            double n = static_cast<double>(acc.n);
            os << " " << label << " steps " << acc.steps / n << " return " << acc.return_ / n;
        };
        emit("before", before);
        os << " |";
        emit("after", after);
        os << "\n";
    }
    for (const std::string& note : result.notes) {
        os << "note: " << note << "\n";
    }
    if (result.no_feasible) {
        os << "note: reduced arms stopped where no plan existed; their rows end there\n";
    }
    return os.str();
}

} // namespace asprl::exp
