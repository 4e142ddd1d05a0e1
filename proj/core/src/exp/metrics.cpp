#include "asprl/exp/metrics.hpp"

#include <cmath>

namespace asprl::exp {

namespace {

/// Merges two sorted entry maps, applying fn(value_a, value_b) per key of
/// the union; a one-sided key substitutes its own init on the other side.
template <typename Fn>
std::size_t for_union(const mdp::QTable::Row& a, const mdp::QTable::Row& b, Fn&& fn) {
    auto ia = a.begin();
    auto ib = b.begin();
    std::size_t n = 0;
    while (ia != a.end() || ib != b.end()) {
        ++n;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            fn(ia->second.value, ia->second.init);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            fn(ib->second.init, ib->second.value);
            ++ib;
        } else {
            fn(ia->second.value, ib->second.value);
            ++ia;
            ++ib;
        }
    }
    return n;
}

} // namespace

double rmsd(const mdp::QTable& a, const mdp::QTable& b) {
    double sum = 0.0;
    std::size_t n = 0;
    auto add = [&](double va, double vb) {
        double d = va - vb;
        sum += d * d;
    };
    auto ia = a.rows().begin();
    auto ib = b.rows().begin();
    static const mdp::QTable::Row empty;
    while (ia != a.rows().end() || ib != b.rows().end()) {
        if (ib == b.rows().end() || (ia != a.rows().end() && ia->first < ib->first)) {
            n += for_union(ia->second, empty, add);
            ++ia;
        } else if (ia == a.rows().end() || ib->first < ia->first) {
            n += for_union(empty, ib->second, add);
            ++ib;
        } else {
            n += for_union(ia->second, ib->second, add);
            ++ia;
            ++ib;
        }
    }
    if (n == 0) {
        throw mdp::EmptyTables("rmsd over empty tables");
    }
    return std::sqrt(sum / static_cast<double>(n));
}

double rmsd_journaled(const mdp::QTable& q) {
    if (q.empty()) {
        throw mdp::EmptyTables("rmsd over an empty table");
    }
    double sum = 0.0;
    for (const auto& [key, before] : q.journal()) {
        const mdp::QEntry* entry = q.find(key.first, key.second);
        double now = entry == nullptr ? before : entry->value;
        double d = now - before;
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(q.size()));
}

} // namespace asprl::exp
