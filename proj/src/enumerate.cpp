#include "wdlkit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wdlkit {

namespace {

constexpr std::size_t kLatticeCap = 8;
constexpr std::size_t kDicompCap = 6;

using Mask = std::uint16_t;

/// Grows a labeled lattice one element at a time in linear-extension order.
/// Every prefix of such a labeling is a meet-semilattice, so each new element
/// only has to keep all pairwise meets unique; the final element is forced to
/// be the top, which makes joins exist as well.
struct LatticeGrower {
    std::size_t n;
    std::vector<Mask> below;  // below[i] includes bit i
    std::vector<std::vector<Mask>>& out;

    void grow() {
        std::size_t i = below.size();
        if (i == n) {
            out.push_back(below);
            return;
        }
        Mask full = static_cast<Mask>((1u << i) - 1);
        Mask first = (i == n - 1) ? full : 1;  // top must dominate everything
        for (Mask d = first; d <= full; ++d) {
            if (i == n - 1 && d != full) break;
            if (!down_closed(d)) continue;
            if (!meets_stay_unique(d)) continue;
            below.push_back(static_cast<Mask>(d | (1u << i)));
            grow();
            below.pop_back();
        }
    }

    bool down_closed(Mask d) const {
        for (std::size_t x = 0; x < below.size(); ++x)
            if ((d >> x) & 1u)
                if (below[x] & static_cast<Mask>(~d)) return false;
        return true;
    }

    bool meets_stay_unique(Mask d) const {
        for (std::size_t x = 0; x < below.size(); ++x) {
            if ((d >> x) & 1u) continue;           // x below the new element: meet is x
            Mask common = d & below[x];            // lower bounds of {new, x}
            bool has_max = false;
            for (std::size_t m = 0; m < below.size() && !has_max; ++m)
                if ((common >> m) & 1u && !(common & static_cast<Mask>(~below[m]))) has_max = true;
            if (!has_max) return false;
        }
        return true;
    }
};

FiniteLattice lattice_from_masks(const std::vector<Mask>& below) {
    std::size_t n = below.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<IndexSet> sets(n, IndexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((below[i] >> j) & 1u) sets[i].set(j);
    return FiniteLattice::from_order(std::move(names), std::move(sets));
}

std::vector<std::size_t> fingerprint(const FiniteLattice& l) {
    std::vector<std::size_t> keys;
    for (std::size_t x = 0; x < l.size(); ++x) {
        std::size_t k = 0;
        k = k * 97 + static_cast<std::size_t>(l.height(static_cast<int>(x)));
        k = k * 97 + static_cast<std::size_t>(l.depth(static_cast<int>(x)));
        k = k * 97 + l.down_set(static_cast<int>(x)).count();
        k = k * 97 + l.lower_covers(static_cast<int>(x)).size();
        k = k * 97 + l.upper_covers(static_cast<int>(x)).size();
        keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    keys.push_back(l.size());
    return keys;
}

/// Minimal row-major order encoding over all relabelings that put the bottom
/// first and the top last. At most (n-2)! candidates with n <= 8; the minimum
/// over this family is the same for isomorphic lattices, so it both defines
/// the frozen output order and doubles as a canonical labeling.
std::pair<std::vector<std::uint64_t>, std::vector<int>> canonical_form(const FiniteLattice& l) {
    std::size_t n = l.size();
    std::vector<int> middle;
    for (std::size_t x = 0; x < n; ++x)
        if (static_cast<int>(x) != l.bottom() && static_cast<int>(x) != l.top())
            middle.push_back(static_cast<int>(x));
    std::sort(middle.begin(), middle.end());  // next_permutation needs the ascending start

    std::vector<int> perm(n, -1);  // old index -> new index
    perm[static_cast<std::size_t>(l.bottom())] = 0;
    if (n > 1) perm[static_cast<std::size_t>(l.top())] = static_cast<int>(n) - 1;

    auto encode = [&]() {
        std::vector<std::uint64_t> enc((n * n + 63) / 64, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (l.leq(static_cast<int>(a), static_cast<int>(b))) {
                    std::size_t bit = static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b]);
                    enc[bit >> 6] |= std::uint64_t{1} << (bit & 63);
                }
        return enc;
    };

    std::vector<std::uint64_t> best;
    std::vector<int> best_perm;
    do {
        for (std::size_t p = 0; p < middle.size(); ++p)
            perm[static_cast<std::size_t>(middle[p])] = static_cast<int>(p) + 1;
        auto enc = encode();
        if (best.empty() || enc < best) {
            best = enc;
            best_perm = perm;
        }
    } while (std::next_permutation(middle.begin(), middle.end()));
    return {best, best_perm};
}

} // namespace

std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
    if (n < 1 || n > kLatticeCap)
        throw SizeCapExceeded("lattice enumeration supports 1..8 elements, got " + std::to_string(n));

    std::vector<std::vector<Mask>> raw;
    LatticeGrower grower{n, {1}, raw};
    if (n == 1) {
        raw.push_back({1});
    } else {
        grower.grow();
    }

    // Deduplicate up to isomorphism: bucket by invariant fingerprint, then
    // settle collisions with the isomorphism search.
    std::map<std::vector<std::size_t>, std::vector<FiniteLattice>> buckets;
    for (const auto& masks : raw) {
        FiniteLattice cand = lattice_from_masks(masks);
        auto& bucket = buckets[fingerprint(cand)];
        bool known = false;
        for (const auto& rep : bucket)
            if (find_isomorphism(cand, rep)) {
                known = true;
                break;
            }
        if (!known) bucket.push_back(std::move(cand));
    }

    // Canonical labeling and the frozen output order.
    std::vector<std::pair<std::vector<std::uint64_t>, FiniteLattice>> canon;
    for (auto& [fp, bucket] : buckets)
        for (auto& rep : bucket) {
            auto [enc, perm] = canonical_form(rep);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < rep.size(); ++i) names.push_back("x" + std::to_string(i));
            canon.emplace_back(enc, rep.relabeled(perm, std::move(names)));
        }
    std::sort(canon.begin(), canon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<FiniteLattice> out;
    out.reserve(canon.size());
    for (auto& [enc, lat] : canon) out.push_back(std::move(lat));
    return out;
}

namespace {

/// Backtracking over one unary table in element order. `dual` flips the
/// roles of meet/join and the comparison direction, giving the (1')-(3')
/// search for free. Pruning: property (i)/(ii) at assignment, then axioms
/// (1)-(3) and the necessary condition (vi)/(vii) on fully assigned tuples.
struct TableSearch {
    const FiniteLattice& l;
    bool dual;
    std::vector<int> table;
    std::vector<std::vector<int>> out;

    int mix(int a, int b) const { return dual ? l.join(a, b) : l.meet(a, b); }    // "meet" role
    int mox(int a, int b) const { return dual ? l.meet(a, b) : l.join(a, b); }    // "join" role
    int unit() const { return dual ? l.bottom() : l.top(); }
    bool lequ(int a, int b) const { return dual ? l.leq(b, a) : l.leq(a, b); }

    void search(std::size_t e) {
        std::size_t n = l.size();
        if (e == n) {
            out.push_back(table);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            table[e] = static_cast<int>(v);
            if (consistent(e)) search(e + 1);
        }
        table[e] = -1;
    }

    bool consistent(std::size_t e) const {
        std::size_t n = l.size();
        auto assigned = [&](int x) { return static_cast<std::size_t>(x) <= e; };
        // (i): x ∨ x^up = 1.
        if (mox(static_cast<int>(e), table[e]) != unit()) return false;
        // (1): x^up^up <= x whenever the chain is known.
        for (std::size_t x = 0; x <= e; ++x) {
            if (!assigned(table[x])) continue;
            int tt = table[static_cast<std::size_t>(table[x])];
            if (!lequ(tt, static_cast<int>(x))) return false;
        }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y <= e; ++y) {
                int m = mix(static_cast<int>(x), static_cast<int>(y));
                // (3): (x∧y) ∨ (x∧y^up) = x needs only y's entry.
                if (mox(m, mix(static_cast<int>(x), table[y])) != static_cast<int>(x)) return false;
                // (2) equationally and (vi) need the meet's entry as well.
                if (x <= e && assigned(m)) {
                    if (mix(table[static_cast<std::size_t>(m)], table[y]) != table[y]) return false;
                    if (table[static_cast<std::size_t>(m)] != mox(table[x], table[y])) return false;
                }
            }
        return true;
    }
};

} // namespace

std::vector<std::vector<int>> enumerate_weak_complementations(const FiniteLattice& l) {
    if (l.size() > kDicompCap)
        throw SizeCapExceeded("dicomplementation search supports up to 6 elements");
    TableSearch s{l, false, std::vector<int>(l.size(), -1), {}};
    s.search(0);
    for (const auto& t : s.out)
        if (!check_weak_axioms(l, t).all_passed())
            throw InternalContradiction("weak complementation search emitted an invalid table");
    return s.out;
}

std::vector<std::vector<int>> enumerate_dual_weak_complementations(const FiniteLattice& l) {
    if (l.size() > kDicompCap)
        throw SizeCapExceeded("dicomplementation search supports up to 6 elements");
    TableSearch s{l, true, std::vector<int>(l.size(), -1), {}};
    s.search(0);
    for (const auto& t : s.out)
        if (!check_dual_axioms(l, t).all_passed())
            throw InternalContradiction("dual weak complementation search emitted an invalid table");
    return s.out;
}

std::vector<Dicomplementation> enumerate_dicomplementations(const FiniteLattice& l) {
    auto ups = enumerate_weak_complementations(l);
    auto downs = enumerate_dual_weak_complementations(l);
    std::vector<Dicomplementation> out;
    out.reserve(ups.size() * downs.size());
    for (const auto& up : ups)
        for (const auto& down : downs) out.push_back({l, up, down});
    return out;
}

namespace {

std::optional<std::string> up_neq_down(const Dicomplementation& d) {
    for (std::size_t x = 0; x < d.lattice.size(); ++x)
        if (d.up[x] != d.down[x])
            return "up and down differ at " + d.lattice.name(static_cast<int>(x));
    return std::nullopt;
}

std::optional<std::string> boolean_part_strict(const Dicomplementation& d) {
    SkeletonDiagnostics diag = boolean_part_diagnostics(d);
    if (!diag.part_equals_intersection && diag.intersection_minus_part_witness)
        return "Boolean part misses " + d.lattice.name(*diag.intersection_minus_part_witness) +
               " from the skeleton intersection";
    return std::nullopt;
}

std::optional<std::string> skeleton_not_subalgebra(const Dicomplementation& d) {
    SkeletonDiagnostics diag = boolean_part_diagnostics(d);
    if (!diag.skeleton_subalgebra && diag.skeleton_closure_witness)
        return "skeleton not closed at " + *diag.skeleton_closure_witness;
    if (!diag.dual_skeleton_subalgebra && diag.dual_skeleton_closure_witness)
        return "dual skeleton not closed at " + *diag.dual_skeleton_closure_witness;
    return std::nullopt;
}

std::optional<Counterexample> pp_pair_case(const FiniteLattice& l) {
    auto pp = double_p_tables(l);
    if (!pp) return std::nullopt;
    AxiomReport r = check_axioms(*pp);
    if (r.all_passed()) return std::nullopt;
    return Counterexample{*pp, "pseudocomplement pair fails " + r.first_failure()->id};
}

} // namespace

const std::vector<std::string>& counterexample_properties() {
    static const std::vector<std::string> names = {
        "boolean-part-strict",
        "skeleton-not-subalgebra",
        "up-neq-down",
        "pp-pair-fails-axioms",
    };
    return names;
}

std::optional<Counterexample> find_counterexample(std::string_view property, std::size_t max_size) {
    const auto& registered = counterexample_properties();
    if (std::find(registered.begin(), registered.end(), property) == registered.end())
        throw UnknownProperty(std::string(property));

    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const FiniteLattice& l : enumerate_lattices(n)) {
            if (property == "pp-pair-fails-axioms") {
                if (auto hit = pp_pair_case(l)) return hit;
                continue;
            }
            for (Dicomplementation& d : enumerate_dicomplementations(l)) {
                std::optional<std::string> why;
                if (property == "up-neq-down") why = up_neq_down(d);
                else if (property == "boolean-part-strict") why = boolean_part_strict(d);
                else if (property == "skeleton-not-subalgebra") why = skeleton_not_subalgebra(d);
                if (why) return Counterexample{std::move(d), std::move(*why)};
            }
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> find_counterexample_in(std::string_view property,
                                                     const std::vector<Dicomplementation>& candidates) {
    const auto& registered = counterexample_properties();
    if (std::find(registered.begin(), registered.end(), property) == registered.end())
        throw UnknownProperty(std::string(property));

    for (const Dicomplementation& d : candidates) {
        if (property == "pp-pair-fails-axioms") {
            if (auto hit = pp_pair_case(d.lattice)) return hit;
            continue;
        }
        if (!check_axioms(d).all_passed()) continue;  // predicates below expect verified input
        std::optional<std::string> why;
        if (property == "up-neq-down") why = up_neq_down(d);
        else if (property == "boolean-part-strict") why = boolean_part_strict(d);
        else if (property == "skeleton-not-subalgebra") why = skeleton_not_subalgebra(d);
        if (why) return Counterexample{d, std::move(*why)};
    }
    return std::nullopt;
}

} // namespace wdlkit
