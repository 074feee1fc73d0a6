#include "wdlkit/closure.hpp"

#include <algorithm>

namespace wdlkit {

namespace {

void check_distinct_names(const std::vector<std::string>& ground) {
    for (std::size_t i = 0; i < ground.size(); ++i)
        for (std::size_t j = i + 1; j < ground.size(); ++j)
            if (ground[i] == ground[j]) throw ParseError("duplicate ground element: " + ground[i]);
}

/// Deterministic element order for the set lattices: by size, then by words.
void sort_family(std::vector<IndexSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.words() < b.words();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::string set_token(const IndexSet& s, const std::vector<std::string>& ground) {
    return format_set(s, [&](int i) { return ground[static_cast<std::size_t>(i)]; });
}

FiniteLattice inclusion_lattice(const std::vector<IndexSet>& sets, const std::vector<std::string>& ground) {
    std::vector<std::string> names;
    names.reserve(sets.size());
    for (const auto& s : sets) names.push_back(set_token(s, ground));
    std::vector<IndexSet> below(sets.size(), IndexSet(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (sets[j].contains(sets[i])) below[j].set(i);
    return FiniteLattice::from_order(std::move(names), std::move(below));
}

int index_of_set(const std::vector<IndexSet>& sets, const IndexSet& s) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == s) return static_cast<int>(i);
    return -1;
}

} // namespace

ClosureSystem::ClosureSystem(std::vector<std::string> ground, std::vector<IndexSet> closed_sets)
    : ground_(std::move(ground)), sets_(std::move(closed_sets)) {
    check_distinct_names(ground_);
    for (const auto& s : sets_)
        if (s.universe() != ground_.size()) throw ParseError("closed set over a different ground set");
    sort_family(sets_);
    if (index_of_set(sets_, IndexSet::full(ground_.size())) < 0)
        throw ParseError("closure system must contain the ground set");
    for (std::size_t i = 0; i < sets_.size(); ++i)
        for (std::size_t j = i + 1; j < sets_.size(); ++j)
            if (index_of_set(sets_, sets_[i] & sets_[j]) < 0)
                throw ParseError("closure system not closed under intersection: " +
                                 set_token(sets_[i], ground_) + " and " + set_token(sets_[j], ground_));
}

IndexSet ClosureSystem::closure_of(const IndexSet& a) const {
    if (a.universe() != ground_.size()) throw OutOfRange("subset over a different ground set");
    IndexSet acc = IndexSet::full(ground_.size());
    for (const auto& s : sets_)
        if (s.contains(a)) acc &= s;
    return acc;
}

KernelSystem::KernelSystem(std::vector<std::string> ground, std::vector<IndexSet> open_sets)
    : ground_(std::move(ground)), sets_(std::move(open_sets)) {
    check_distinct_names(ground_);
    for (const auto& s : sets_)
        if (s.universe() != ground_.size()) throw ParseError("open set over a different ground set");
    sort_family(sets_);
    if (index_of_set(sets_, IndexSet(ground_.size())) < 0)
        throw ParseError("kernel system must contain the empty set");
    for (std::size_t i = 0; i < sets_.size(); ++i)
        for (std::size_t j = i + 1; j < sets_.size(); ++j)
            if (index_of_set(sets_, sets_[i] | sets_[j]) < 0)
                throw ParseError("kernel system not closed under union: " +
                                 set_token(sets_[i], ground_) + " and " + set_token(sets_[j], ground_));
}

IndexSet KernelSystem::kernel_of(const IndexSet& b) const {
    if (b.universe() != ground_.size()) throw OutOfRange("subset over a different ground set");
    IndexSet acc(ground_.size());
    for (const auto& s : sets_)
        if (b.contains(s)) acc |= s;
    return acc;
}

ClosedSetLattice lattice_of_closed_sets(const ClosureSystem& s) {
    ClosedSetLattice out{inclusion_lattice(s.sets(), s.ground()), s.sets(), {}};
    out.up.resize(out.sets.size());
    for (std::size_t i = 0; i < out.sets.size(); ++i)
        out.up[i] = index_of_set(out.sets, s.closure_of(out.sets[i].complement()));
    if (!check_weak_axioms(out.lattice, out.up).all_passed())
        throw InternalContradiction("closed-set lattice failed axioms (1)-(3)");
    return out;
}

OpenSetLattice lattice_of_open_sets(const KernelSystem& s) {
    OpenSetLattice out{inclusion_lattice(s.sets(), s.ground()), s.sets(), {}};
    out.down.resize(out.sets.size());
    for (std::size_t i = 0; i < out.sets.size(); ++i)
        out.down[i] = index_of_set(out.sets, s.kernel_of(out.sets[i].complement()));
    if (!check_dual_axioms(out.lattice, out.down).all_passed())
        throw InternalContradiction("open-set lattice failed axioms (1')-(3')");
    return out;
}

namespace {

void require_order_isomorphism(const ClosedSetLattice& ch, const OpenSetLattice& ok,
                               const std::vector<int>& phi) {
    if (phi.size() != ch.sets.size() || ch.sets.size() != ok.sets.size())
        throw NotAnIsomorphism("<size>", "<size>");
    std::vector<bool> seen(ok.sets.size(), false);
    for (int v : phi) {
        if (v < 0 || static_cast<std::size_t>(v) >= ok.sets.size() || seen[static_cast<std::size_t>(v)])
            throw NotAnIsomorphism("<pairing>", "<not a bijection>");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t a = 0; a < phi.size(); ++a)
        for (std::size_t b = 0; b < phi.size(); ++b)
            if (ch.lattice.leq(static_cast<int>(a), static_cast<int>(b)) !=
                ok.lattice.leq(phi[a], phi[b]))
                throw NotAnIsomorphism(ch.lattice.name(static_cast<int>(a)),
                                       ch.lattice.name(static_cast<int>(b)));
}

} // namespace

CombinedSystem combine_systems(const ClosureSystem& h, const KernelSystem& k, const std::vector<int>& phi) {
    ClosedSetLattice ch = lattice_of_closed_sets(h);
    OpenSetLattice ok = lattice_of_open_sets(k);
    require_order_isomorphism(ch, ok, phi);

    std::size_t n = phi.size();
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(phi[i])] = static_cast<int>(i);

    std::vector<std::string> names(n);
    std::vector<IndexSet> below(n, IndexSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = ch.lattice.name(static_cast<int>(i)) + "|" + ok.lattice.name(phi[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (ch.lattice.leq(static_cast<int>(i), static_cast<int>(j))) below[j].set(i);
    }
    FiniteLattice graph = FiniteLattice::from_order(std::move(names), std::move(below));

    std::vector<int> up(n), down(n);
    for (std::size_t i = 0; i < n; ++i) {
        up[i] = ch.up[i];                                              // pair (x^up_h, phi(x^up_h))
        down[i] = inv[static_cast<std::size_t>(ok.down[static_cast<std::size_t>(phi[i])])];
    }
    Dicomplementation d{std::move(graph), std::move(up), std::move(down)};
    if (!check_axioms(d).all_passed())
        throw InternalContradiction("combined closure/kernel structure failed the axiom check");

    CombinedSystem out{std::move(d), {}};
    for (std::size_t i = 0; i < n; ++i) out.pairs.emplace_back(static_cast<int>(i), phi[i]);
    return out;
}

TransportedTables transport_via_isomorphism(const ClosureSystem& h, const KernelSystem& k,
                                            const std::vector<int>& phi) {
    ClosedSetLattice ch = lattice_of_closed_sets(h);
    OpenSetLattice ok = lattice_of_open_sets(k);
    require_order_isomorphism(ch, ok, phi);

    std::size_t n = phi.size();
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(phi[i])] = static_cast<int>(i);

    TransportedTables out;
    out.down_on_closed.resize(n);
    out.up_on_open.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.down_on_closed[i] = inv[static_cast<std::size_t>(ok.down[static_cast<std::size_t>(phi[i])])];
    for (std::size_t j = 0; j < n; ++j)
        out.up_on_open[j] = phi[static_cast<std::size_t>(ch.up[static_cast<std::size_t>(inv[j])])];

    if (!check_axioms(ch.lattice, ch.up, out.down_on_closed).all_passed())
        throw InternalContradiction("transported down table failed the axiom check");
    if (!check_axioms(ok.lattice, out.up_on_open, ok.down).all_passed())
        throw InternalContradiction("transported up table failed the axiom check");
    return out;
}

} // namespace wdlkit
