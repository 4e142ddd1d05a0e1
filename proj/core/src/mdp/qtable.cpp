#include "asprl/mdp/qtable.hpp"

#include <sstream>

#include "asprl/csv.hpp"

namespace asprl::mdp {

QInit QInit::uniform(double lo, double hi) {
    if (!(lo <= hi)) {
        throw Error("QInit::uniform needs lo <= hi");
    }
    return QInit(lo, hi);
}

double QInit::draw(Rng& rng) const {
    if (lo_ == hi_) {
        return lo_;
    }
    return rng.next_uniform(lo_, hi_);
}

const QEntry* QTable::find(const std::string& s, const std::string& a) const {
    auto row = rows_.find(s);
    if (row == rows_.end()) {
        return nullptr;
    }
    auto entry = row->second.find(a);
    return entry == row->second.end() ? nullptr : &entry->second;
}

double QTable::value_or(const std::string& s, const std::string& a, double fallback) const {
    const QEntry* entry = find(s, a);
    return entry == nullptr ? fallback : entry->value;
}

const QTable::Row* QTable::row(const std::string& s) const {
    auto it = rows_.find(s);
    return it == rows_.end() ? nullptr : &it->second;
}

QEntry& QTable::ensure(const std::string& s, const std::string& a, double init) {
    auto [it, inserted] = rows_[s].try_emplace(a, QEntry{init, init});
    if (inserted) {
        ++count_;
        if (journaling_) {
            journal_.try_emplace({s, a}, init);
        }
    }
    return it->second;
}

void QTable::set(const std::string& s, const std::string& a, double value) {
    auto row = rows_.find(s);
    if (row != rows_.end()) {
        auto entry = row->second.find(a);
        if (entry != row->second.end()) {
            if (journaling_) {
                journal_.try_emplace({s, a}, entry->second.value);
            }
            entry->second.value = value;
            return;
        }
    }
    throw Error("set on unknown pair (" + s + ", " + a + ")");
}

void QTable::begin_journal() {
    journaling_ = true;
    journal_.clear();
}

void QTable::drop_journal() {
    journaling_ = false;
    journal_.clear();
}

std::string QTable::to_csv() const {
    std::ostringstream out;
    out << "state,action,value\n";
    for (const auto& [state, row] : rows_) {
        for (const auto& [action, entry] : row) {
            out << csv_escape(state) << ',' << csv_escape(action) << ','
                << format_double(entry.value) << '\n';
        }
    }
    return out.str();
}

QTable QTable::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "state,action,value") {
        throw Error("expected header 'state,action,value'");
    }
    QTable table;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = csv_split(line);
        if (fields.size() != 3) {
            throw Error("expected 3 fields per row, got '" + line + "'");
        }
        std::size_t used = 0;
        double value = std::stod(fields[2], &used);
        if (used != fields[2].size()) {
            throw Error("bad value '" + fields[2] + "'");
        }
        table.ensure(fields[0], fields[1], value);
    }
    return table;
}

QTable merge_q(const QTable& old_q, const ReducedMdp& new_mdp, const QInit& init, Rng& rng) {
    QTable result;
    for (const auto& [pair, next] : new_mdp.allowed) {
        const QEntry* kept = old_q.find(pair.first, pair.second);
        if (kept != nullptr) {
            result.ensure(pair.first, pair.second, kept->init).value = kept->value;
        } else {
            result.ensure(pair.first, pair.second, init.draw(rng));
        }
    }
    return result;
}

} // namespace asprl::mdp
