#include "asprl/mdp/reduced.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "asprl/lang/simulate.hpp"

namespace asprl::mdp {

bool ReducedMdp::has_state(const std::string& s) const {
    return std::binary_search(states.begin(), states.end(), s);
}

const std::vector<std::string>* ReducedMdp::actions_at(const std::string& s) const {
    auto it = actions_by_state.find(s);
    return it == actions_by_state.end() ? nullptr : &it->second;
}

const std::vector<std::string>* ReducedMdp::next_states(const std::string& s,
                                                        const std::string& a) const {
    auto it = allowed.find({s, a});
    return it == allowed.end() ? nullptr : &it->second;
}

void ReducedMdp::rebuild_index() {
    actions_by_state.clear();
    for (const auto& [pair, next] : allowed) {
        actions_by_state[pair.first].push_back(pair.second);
    }
}

namespace {

/// Occurrence data of a trajectory set, id-keyed against its Vocab.
struct Occurrences {
    std::set<std::uint32_t> states;
    std::set<std::uint32_t> actions;
    std::set<std::uint32_t> initial;
    std::set<std::uint32_t> goal;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> next;
};

Occurrences collect(const TrajectorySet& h, bool with_next) {
    if (h.empty()) {
        throw EmptyTrajectorySet("trajectory set is empty");
    }
    Occurrences occ;
    for (const Trajectory& t : h.trajectories) {
        occ.initial.insert(t.state_ids.front());
        occ.goal.insert(t.state_ids.back());
        for (std::size_t i = 0; i < t.length(); ++i) {
            occ.states.insert(t.state_ids[i]);
            occ.actions.insert(t.action_ids[i]);
            auto pair = std::make_pair(t.state_ids[i], t.action_ids[i]);
            occ.pairs.insert(pair);
            if (with_next) {
                occ.next[pair].insert(t.state_ids[i + 1]);
            }
        }
        occ.states.insert(t.state_ids.back());
    }
    return occ;
}

/// The states/actions of `h` must belong to `d`'s vocabulary; checking the
/// interning tables once covers every occurrence.
void validate_vocab(const TrajectorySet& h, const lang::ActionDescription& d) {
    const Vocab& vocab = *h.trajectories.front().vocab;
    for (std::uint32_t id = 0; id < vocab.states.size(); ++id) {
        lang::parse_state(d, vocab.states.name(id));
    }
    for (std::uint32_t id = 0; id < vocab.actions.size(); ++id) {
        if (d.find_action(vocab.actions.name(id)) == nullptr) {
            throw lang::ValidationError("trajectory action '" + vocab.actions.name(id) +
                                        "' is not declared");
        }
    }
}

std::vector<std::string> to_names(const std::set<std::uint32_t>& ids, const SymbolTable& table) {
    std::vector<std::string> names;
    names.reserve(ids.size());
    for (std::uint32_t id : ids) {
        names.push_back(table.name(id));
    }
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace

ReducedMdp build_reduced(const TrajectorySet& h, const lang::ActionDescription& d) {
    Occurrences occ = collect(h, true);
    validate_vocab(h, d);
    const Vocab& vocab = *h.trajectories.front().vocab;

    ReducedMdp mdp;
    mdp.states = to_names(occ.states, vocab.states);
    mdp.actions = to_names(occ.actions, vocab.actions);
    mdp.initial_states = to_names(occ.initial, vocab.states);
    mdp.goal_states = to_names(occ.goal, vocab.states);
    for (const auto& [pair, nexts] : occ.next) {
        mdp.allowed[{vocab.states.name(pair.first), vocab.actions.name(pair.second)}] =
            to_names(nexts, vocab.states);
    }
    mdp.rebuild_index();
    return mdp;
}

ReducedMdp build_reduced_subtractive(const TrajectorySet& h, const lang::ActionDescription& d) {
    Occurrences occ = collect(h, false);
    validate_vocab(h, d);
    const Vocab& vocab = *h.trajectories.front().vocab;

    ReducedMdp mdp;
    mdp.states = to_names(occ.states, vocab.states);
    mdp.actions = to_names(occ.actions, vocab.actions);
    mdp.initial_states = to_names(occ.initial, vocab.states);
    mdp.goal_states = to_names(occ.goal, vocab.states);
    for (const auto& [s_id, a_id] : occ.pairs) {
        const std::string& s = vocab.states.name(s_id);
        const std::string& a = vocab.actions.name(a_id);
        std::vector<std::string> nexts;
        for (const lang::Valuation& v : lang::successors(d, lang::parse_state(d, s), a)) {
            std::string name = lang::format_state(d, v);
            if (std::binary_search(mdp.states.begin(), mdp.states.end(), name)) {
                nexts.push_back(std::move(name));
            }
        }
        std::sort(nexts.begin(), nexts.end());
        mdp.allowed[{s, a}] = std::move(nexts);
    }
    mdp.rebuild_index();
    return mdp;
}

namespace {

void write_section(std::ostringstream& out, const char* tag,
                   const std::vector<std::string>& items) {
    out << tag << ' ' << items.size() << '\n';
    for (const std::string& item : items) {
        out << item << '\n';
    }
}

} // namespace

std::string serialize_reduced(const ReducedMdp& mdp) {
    std::ostringstream out;
    out << "reduced-mdp v1\n";
    write_section(out, "states", mdp.states);
    write_section(out, "actions", mdp.actions);
    write_section(out, "initial", mdp.initial_states);
    write_section(out, "goal", mdp.goal_states);
    out << "allowed " << mdp.allowed.size() << '\n';
    for (const auto& [pair, nexts] : mdp.allowed) {
        out << pair.first << '\t' << pair.second;
        for (const std::string& next : nexts) {
            out << '\t' << next;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    std::string next() {
        std::string line;
        if (!std::getline(in_, line)) {
            throw Error("reduced-mdp text ends prematurely");
        }
        return line;
    }

    std::size_t counted_header(const std::string& tag) {
        std::string line = next();
        std::istringstream fields(line);
        std::string word;
        std::size_t n = 0;
        if (!(fields >> word >> n) || word != tag) {
            throw Error("expected '" + tag + " <count>', got '" + line + "'");
        }
        return n;
    }

    std::vector<std::string> section(const std::string& tag) {
        std::size_t n = counted_header(tag);
        std::vector<std::string> items;
        items.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            items.push_back(next());
        }
        return items;
    }

private:
    std::istringstream in_;
};

} // namespace

ReducedMdp parse_reduced(const std::string& text) {
    LineReader reader(text);
    if (reader.next() != "reduced-mdp v1") {
        throw Error("unsupported reduced-mdp header");
    }
    ReducedMdp mdp;
    mdp.states = reader.section("states");
    mdp.actions = reader.section("actions");
    mdp.initial_states = reader.section("initial");
    mdp.goal_states = reader.section("goal");
    std::size_t pairs = reader.counted_header("allowed");
    for (std::size_t i = 0; i < pairs; ++i) {
        std::string line = reader.next();
        std::vector<std::string> fields;
        std::size_t from = 0;
        while (from <= line.size()) {
            std::size_t tab = line.find('\t', from);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(from));
                break;
            }
            fields.push_back(line.substr(from, tab - from));
            from = tab + 1;
        }
        if (fields.size() < 2) {
            throw Error("allowed line needs at least state and action: '" + line + "'");
        }
        mdp.allowed[{fields[0], fields[1]}] =
            std::vector<std::string>(fields.begin() + 2, fields.end());
    }
    mdp.rebuild_index();
    return mdp;
}

} // namespace asprl::mdp
