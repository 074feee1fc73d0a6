#pragma once

#include <set>
#include <string>
#include <vector>

#include "wdlkit/dicomplementation.hpp"
#include "wdlkit/lattice.hpp"

namespace wdlkit::testing {

inline FiniteLattice n5() {
    return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline FiniteLattice m3() {
    return FiniteLattice::from_covers({"0", "p", "q", "r", "1"},
                                      {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

inline FiniteLattice chain3() {
    return FiniteLattice::from_covers({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
}

inline std::set<std::string> name_set(const FiniteLattice& l, const IndexSet& s) {
    std::set<std::string> out;
    s.for_each([&](int i) { out.insert(l.name(i)); });
    return out;
}

/// Independent greatest-lower-bound oracle: scan all common lower bounds and
/// demand a unique maximum, using only the raw order relation.
inline int naive_meet(const FiniteLattice& l, int a, int b) {
    std::vector<int> lower;
    for (std::size_t z = 0; z < l.size(); ++z)
        if (l.leq(static_cast<int>(z), a) && l.leq(static_cast<int>(z), b)) lower.push_back(static_cast<int>(z));
    int best = -1;
    for (int z : lower) {
        bool greatest = true;
        for (int w : lower)
            if (!l.leq(w, z)) greatest = false;
        if (greatest) best = z;
    }
    return best;
}

inline int naive_join(const FiniteLattice& l, int a, int b) {
    std::vector<int> upper;
    for (std::size_t z = 0; z < l.size(); ++z)
        if (l.leq(a, static_cast<int>(z)) && l.leq(b, static_cast<int>(z))) upper.push_back(static_cast<int>(z));
    int best = -1;
    for (int z : upper) {
        bool least = true;
        for (int w : upper)
            if (!l.leq(z, w)) least = false;
        if (least) best = z;
    }
    return best;
}

/// Re-evaluates a failing report entry from the tables, confirming that the
/// recorded witness really violates the stated relation.
inline bool witness_violates(const Dicomplementation& d, const CheckResult& r) {
    if (r.passed) return false;
    const FiniteLattice& l = d.lattice;
    int lhs = l.index_of(r.lhs), rhs = l.index_of(r.rhs);
    return r.relation == CheckResult::Relation::Equal ? lhs != rhs : !l.leq(lhs, rhs);
}

} // namespace wdlkit::testing
