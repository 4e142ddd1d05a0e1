#ifndef ASPRL_MDP_QTABLE_HPP
#define ASPRL_MDP_QTABLE_HPP

#include <map>
#include <string>
#include <utility>

#include "asprl/errors.hpp"
#include "asprl/mdp/reduced.hpp"
#include "asprl/rng.hpp"

namespace asprl::mdp {

class EmptyTables : public Error {
public:
    using Error::Error;
};

/// Initialization policy for unseen (state, action) pairs: a constant, or a
/// uniform draw from [lo, hi]. A degenerate range consumes no randomness,
/// which keeps rng streams stable for constant setups.
class QInit {
public:
    static QInit constant(double v) { return QInit(v, v); }
    static QInit uniform(double lo, double hi);

    double draw(Rng& rng) const;
    /// Deterministic stand-in used where no rng is available (update rules
    /// adding a missing pair); run_episode always keys pairs with draw()
    /// first, so this is a fallback for direct calls.
    double fallback() const { return lo_; }

private:
    QInit(double lo, double hi) : lo_(lo), hi_(hi) {}

    double lo_;
    double hi_;
};

/// A table entry remembers the value it was initialized with; deviation
/// metrics read the init as the entry's stand-in in tables that lack it.
struct QEntry {
    double value = 0.0;
    double init = 0.0;
};

/// Tabular action-value function keyed by state and action name. An
/// optional journal records, per key, the value it had when the journal
/// was opened (or its init value for keys added later); metrics use it to
/// diff consecutive episode snapshots without copying the table.
class QTable {
public:
    using Key = std::pair<std::string, std::string>;
    using Row = std::map<std::string, QEntry>;

    bool empty() const { return count_ == 0; }
    std::size_t size() const { return count_; }
    const std::map<std::string, Row>& rows() const { return rows_; }

    const QEntry* find(const std::string& s, const std::string& a) const;
    double value_or(const std::string& s, const std::string& a, double fallback) const;
    const Row* row(const std::string& s) const;

    /// Inserts (s, a) with value = init when absent; no-op otherwise.
    QEntry& ensure(const std::string& s, const std::string& a, double init);
    /// Overwrites the value of an existing entry; throws Error when absent.
    void set(const std::string& s, const std::string& a, double value);

    void begin_journal();
    void drop_journal();
    bool journaling() const { return journaling_; }
    const std::map<Key, double>& journal() const { return journal_; }

    /// CSV with header `state,action,value`, rows sorted by state then
    /// action. Loading sets init = value (the draw is not recorded).
    std::string to_csv() const;
    static QTable from_csv(const std::string& text);

private:
    std::map<std::string, Row> rows_;
    std::size_t count_ = 0;
    bool journaling_ = false;
    std::map<Key, double> journal_;
};

/// Reshapes a table to a new support: the result keys exactly the allowed
/// pairs of `new_mdp`; pairs already in `old_q` keep their entries, new
/// pairs draw from `init` (in deterministic key order), dropped pairs
/// disappear.
QTable merge_q(const QTable& old_q, const ReducedMdp& new_mdp, const QInit& init, Rng& rng);

} // namespace asprl::mdp

#endif
