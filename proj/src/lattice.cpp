#include "wdlkit/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wdlkit {

namespace {

std::string set_names(const IndexSet& s, const std::vector<std::string>& names) {
    return format_set(s, [&](int i) { return names[static_cast<std::size_t>(i)]; });
}

/// Maximal elements of `s` w.r.t. the given down-sets.
IndexSet maximal_of(const IndexSet& s, const std::vector<IndexSet>& below) {
    IndexSet out = s;
    s.for_each([&](int x) {
        s.for_each([&](int y) {
            if (x != y && below[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x)))
                out.reset(static_cast<std::size_t>(x));  // x < y, not maximal
        });
    });
    return out;
}

} // namespace

int FiniteLattice::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw OutOfRange(std::string(name));
    return it->second;
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> names,
                                         const std::vector<std::pair<std::string, std::string>>& covers) {
    FiniteLattice L;
    L.names_ = std::move(names);
    if (L.names_.empty()) throw NotBounded("empty carrier");
    for (std::size_t i = 0; i < L.names_.size(); ++i) {
        if (L.index_.count(L.names_[i]))
            throw ParseError("duplicate element name: " + L.names_[i]);
        L.index_[L.names_[i]] = static_cast<int>(i);
    }
    std::size_t n = L.names_.size();
    L.below_.assign(n, IndexSet(n));
    for (std::size_t i = 0; i < n; ++i) L.below_[i].set(i);
    for (const auto& [lo, hi] : covers) {
        int a = L.index_of(lo), b = L.index_of(hi);
        L.below_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    }
    // Warshall closure over the cover relation.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (L.below_[i].test(k)) L.below_[i] |= L.below_[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (L.below_[i].test(j) && L.below_[j].test(i))
                throw CycleDetected(L.names_[i], L.names_[j]);
    L.finalize();
    return L;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names, std::vector<IndexSet> below) {
    FiniteLattice L;
    L.names_ = std::move(names);
    if (L.names_.empty()) throw NotBounded("empty carrier");
    for (std::size_t i = 0; i < L.names_.size(); ++i) {
        if (L.index_.count(L.names_[i]))
            throw ParseError("duplicate element name: " + L.names_[i]);
        L.index_[L.names_[i]] = static_cast<int>(i);
    }
    L.below_ = std::move(below);
    std::size_t n = L.names_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (L.below_[i].test(j) && L.below_[j].test(i))
                throw CycleDetected(L.names_[i], L.names_[j]);
    L.finalize();
    return L;
}

void FiniteLattice::finalize() {
    std::size_t n = names_.size();
    above_.assign(n, IndexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        below_[i].for_each([&](int j) { above_[static_cast<std::size_t>(j)].set(i); });

    meet_.assign(n * n, -1);
    join_.assign(n * n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            IndexSet lower = below_[a] & below_[b];
            int m = -1;
            lower.for_each([&](int c) {
                if (below_[static_cast<std::size_t>(c)].contains(lower)) m = c;
            });
            if (m < 0) {
                IndexSet maxima = maximal_of(lower, below_);
                std::string reason = lower.empty()
                    ? "no common lower bound"
                    : "incomparable maximal lower bounds " + set_names(maxima, names_);
                throw NotALattice(names_[a], names_[b], reason);
            }
            IndexSet upper = above_[a] & above_[b];
            int j = -1;
            upper.for_each([&](int c) {
                if (above_[static_cast<std::size_t>(c)].contains(upper)) j = c;
            });
            if (j < 0) {
                // Minimal upper bounds are the maximal elements of the dual.
                IndexSet minima = upper;
                upper.for_each([&](int x) {
                    upper.for_each([&](int y) {
                        if (x != y && below_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)))
                            minima.reset(static_cast<std::size_t>(x));
                    });
                });
                std::string reason = upper.empty()
                    ? "no common upper bound"
                    : "incomparable minimal upper bounds " + set_names(minima, names_);
                throw NotALattice(names_[a], names_[b], reason);
            }
            meet_[a * n + b] = meet_[b * n + a] = m;
            join_[a * n + b] = join_[b * n + a] = j;
        }
    }

    bottom_ = 0;
    top_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bottom_ = meet(bottom_, static_cast<int>(i));
        top_ = join(top_, static_cast<int>(i));
    }

    lower_covers_.assign(n, {});
    upper_covers_.assign(n, {});
    for (std::size_t b = 0; b < n; ++b) {
        below_[b].for_each([&](int a) {
            if (static_cast<std::size_t>(a) == b) return;
            // a covered by b: nothing strictly between.
            bool covered = true;
            (below_[b] & above_[static_cast<std::size_t>(a)]).for_each([&](int c) {
                if (static_cast<std::size_t>(c) != b && c != a) covered = false;
            });
            if (covered) {
                lower_covers_[b].push_back(a);
                upper_covers_[static_cast<std::size_t>(a)].push_back(static_cast<int>(b));
            }
        });
    }

    height_.assign(n, 0);
    depth_.assign(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return below_[static_cast<std::size_t>(a)].count() < below_[static_cast<std::size_t>(b)].count();
    });
    for (int x : order)
        for (int c : lower_covers_[static_cast<std::size_t>(x)])
            height_[static_cast<std::size_t>(x)] =
                std::max(height_[static_cast<std::size_t>(x)], height_[static_cast<std::size_t>(c)] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : upper_covers_[static_cast<std::size_t>(*it)])
            depth_[static_cast<std::size_t>(*it)] =
                std::max(depth_[static_cast<std::size_t>(*it)], depth_[static_cast<std::size_t>(c)] + 1);
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    if (!names.empty()) {
        names.front() = "0";
        names.back() = n > 1 ? "1" : "0";
    }
    for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
    return from_covers(std::move(names), covers);
}

FiniteLattice FiniteLattice::boolean_cube(std::size_t atoms) {
    static const char letters[] = "pqrstuvw";
    std::size_t n = std::size_t{1} << atoms;
    std::vector<std::string> names(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (m == 0) {
            names[m] = "0";
        } else if (m == n - 1 && atoms > 0) {
            names[m] = "1";
        } else {
            for (std::size_t b = 0; b < atoms; ++b)
                if (m & (std::size_t{1} << b)) names[m] += letters[b];
        }
    }
    std::vector<IndexSet> below(n, IndexSet(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if ((a & b) == a) below[b].set(a);
    return from_order(std::move(names), std::move(below));
}

int FiniteLattice::meet_of(const IndexSet& s) const {
    int acc = top_;
    s.for_each([&](int x) { acc = meet(acc, x); });
    return acc;
}

int FiniteLattice::join_of(const IndexSet& s) const {
    int acc = bottom_;
    s.for_each([&](int x) { acc = join(acc, x); });
    return acc;
}

IndexSet FiniteLattice::join_irreducibles() const {
    IndexSet out(size());
    for (std::size_t x = 0; x < size(); ++x)
        if (lower_covers_[x].size() == 1) out.set(x);
    return out;
}

IndexSet FiniteLattice::meet_irreducibles() const {
    IndexSet out(size());
    for (std::size_t x = 0; x < size(); ++x)
        if (upper_covers_[x].size() == 1) out.set(x);
    return out;
}

std::optional<int> FiniteLattice::pseudocomplement(int x) const {
    IndexSet zeros(size());
    for (std::size_t y = 0; y < size(); ++y)
        if (meet(x, static_cast<int>(y)) == bottom_) zeros.set(y);
    int best = -1;
    zeros.for_each([&](int y) {
        if (below_[static_cast<std::size_t>(y)].contains(zeros)) best = y;
    });
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> FiniteLattice::dual_pseudocomplement(int x) const {
    IndexSet ones(size());
    for (std::size_t y = 0; y < size(); ++y)
        if (join(x, static_cast<int>(y)) == top_) ones.set(y);
    int best = -1;
    ones.for_each([&](int y) {
        if (above_[static_cast<std::size_t>(y)].contains(ones)) best = y;
    });
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<DistributivityWitness> FiniteLattice::distributivity_witness() const {
    int n = static_cast<int>(size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
                    return DistributivityWitness{x, y, z};
    return std::nullopt;
}

IndexSet FiniteLattice::complemented_elements() const {
    IndexSet out(size());
    for (std::size_t x = 0; x < size(); ++x)
        if (complement_of(static_cast<int>(x))) out.set(x);
    return out;
}

std::optional<int> FiniteLattice::complement_of(int x) const {
    for (std::size_t z = 0; z < size(); ++z)
        if (meet(x, static_cast<int>(z)) == bottom_ && join(x, static_cast<int>(z)) == top_)
            return static_cast<int>(z);
    return std::nullopt;
}

std::pair<FiniteLattice, std::vector<int>> FiniteLattice::sublattice(const IndexSet& members) const {
    std::vector<int> to_old = members.elements();
    std::vector<int> to_new(size(), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) to_new[static_cast<std::size_t>(to_old[i])] = static_cast<int>(i);
    for (int a : to_old)
        for (int b : to_old) {
            if (to_new[static_cast<std::size_t>(meet(a, b))] < 0)
                throw Error("subset not closed under meet: " + name(a) + "," + name(b));
            if (to_new[static_cast<std::size_t>(join(a, b))] < 0)
                throw Error("subset not closed under join: " + name(a) + "," + name(b));
        }
    std::vector<std::string> names;
    names.reserve(to_old.size());
    for (int x : to_old) names.push_back(name(x));
    std::vector<IndexSet> below(to_old.size(), IndexSet(to_old.size()));
    for (std::size_t i = 0; i < to_old.size(); ++i)
        for (std::size_t j = 0; j < to_old.size(); ++j)
            if (leq(to_old[i], to_old[j])) below[j].set(i);
    return {from_order(std::move(names), std::move(below)), std::move(to_old)};
}

std::vector<std::uint64_t> FiniteLattice::order_encoding() const {
    std::size_t n = size();
    std::vector<std::uint64_t> enc((n * n + 63) / 64, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (leq(static_cast<int>(a), static_cast<int>(b))) {
                std::size_t bit = a * n + b;
                enc[bit >> 6] |= std::uint64_t{1} << (bit & 63);
            }
    return enc;
}

FiniteLattice FiniteLattice::relabeled(const std::vector<int>& perm, std::vector<std::string> new_names) const {
    std::size_t n = size();
    std::vector<IndexSet> below(n, IndexSet(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (leq(static_cast<int>(a), static_cast<int>(b)))
                below[static_cast<std::size_t>(perm[b])].set(static_cast<std::size_t>(perm[a]));
    return from_order(std::move(new_names), std::move(below));
}

namespace {

struct ElementKey {
    int height, depth;
    std::size_t below, above;
    std::size_t lc, uc;

    bool operator==(const ElementKey&) const = default;
    bool operator<(const ElementKey& o) const {
        return std::tie(height, depth, below, above, lc, uc) <
               std::tie(o.height, o.depth, o.below, o.above, o.lc, o.uc);
    }
};

ElementKey key_of(const FiniteLattice& L, int x) {
    return {L.height(x), L.depth(x), L.down_set(x).count(), L.up_set(x).count(),
            L.lower_covers(x).size(), L.upper_covers(x).size()};
}

bool extend(const FiniteLattice& a, const FiniteLattice& b,
            const std::vector<int>& order, std::size_t pos,
            const std::vector<std::vector<int>>& candidates,
            std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int x = order[pos];
    for (int y : candidates[pos]) {
        if (used[static_cast<std::size_t>(y)]) continue;
        bool ok = true;
        for (std::size_t p = 0; p < pos && ok; ++p) {
            int x2 = order[p], y2 = map[static_cast<std::size_t>(x2)];
            if (a.leq(x, x2) != b.leq(y, y2) || a.leq(x2, x) != b.leq(y2, y)) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = true;
        if (extend(a, b, order, pos + 1, candidates, map, used)) return true;
        used[static_cast<std::size_t>(y)] = false;
        map[static_cast<std::size_t>(x)] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::size_t n = a.size();

    std::map<ElementKey, std::vector<int>> classes_a, classes_b;
    for (std::size_t x = 0; x < n; ++x) classes_a[key_of(a, static_cast<int>(x))].push_back(static_cast<int>(x));
    for (std::size_t y = 0; y < n; ++y) classes_b[key_of(b, static_cast<int>(y))].push_back(static_cast<int>(y));
    if (classes_a.size() != classes_b.size()) return std::nullopt;
    for (const auto& [k, v] : classes_a) {
        auto it = classes_b.find(k);
        if (it == classes_b.end() || it->second.size() != v.size()) return std::nullopt;
    }

    // Most constrained classes first; ties broken by element index.
    std::vector<int> order;
    std::vector<std::vector<int>> candidates;
    std::vector<std::pair<std::size_t, ElementKey>> class_order;
    for (const auto& [k, v] : classes_a) class_order.emplace_back(v.size(), k);
    std::sort(class_order.begin(), class_order.end());
    for (const auto& [sz, k] : class_order)
        for (int x : classes_a[k]) {
            order.push_back(x);
            candidates.push_back(classes_b[k]);
        }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (!extend(a, b, order, 0, candidates, map, used)) return std::nullopt;

    // An order isomorphism between lattices is a lattice isomorphism; confirm
    // against the tables anyway.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            int fx = map[x], fy = map[y];
            if (map[static_cast<std::size_t>(a.meet(static_cast<int>(x), static_cast<int>(y)))] != b.meet(fx, fy) ||
                map[static_cast<std::size_t>(a.join(static_cast<int>(x), static_cast<int>(y)))] != b.join(fx, fy))
                return std::nullopt;
        }
    return map;
}

} // namespace wdlkit
