#include "wdlkit/dicomplementation.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>

#include "wdlkit/parallel.hpp"

namespace wdlkit {

namespace {

using Rel = CheckResult::Relation;

struct PairScanHit {
    std::size_t x = 0, y = 0;
    int lhs = -1, rhs = -1;
    bool found = false;
};

/// First (x, y) in lexicographic order where eval(x, y) reports a violation.
/// eval fills lhs/rhs and returns false on violation. Chunks scan disjoint
/// x-ranges; the reduction keeps the smallest index, so the witness matches
/// the serial scan.
template <class Eval>
PairScanHit scan_pairs(std::size_t n, Eval&& eval) {
    std::vector<PairScanHit> results;
    std::mutex m;
    parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
        PairScanHit local;
        for (std::size_t x = begin; x < end && !local.found; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                int lhs = -1, rhs = -1;
                if (!eval(x, y, lhs, rhs)) {
                    local = {x, y, lhs, rhs, true};
                    break;
                }
            }
        std::lock_guard<std::mutex> lock(m);
        results.push_back(local);
    }, /*serial_threshold=*/128);
    PairScanHit best;
    for (const auto& h : results)
        if (h.found && (!best.found || h.x < best.x || (h.x == best.x && h.y < best.y))) best = h;
    return best;
}

CheckResult pair_check(const FiniteLattice& l, std::string id,
                       std::function<bool(std::size_t, std::size_t, int&, int&)> eval, Rel rel) {
    PairScanHit hit = scan_pairs(l.size(), eval);
    if (!hit.found) return CheckResult::pass(std::move(id));
    return CheckResult::fail(std::move(id),
                             {{"x", l.name(static_cast<int>(hit.x))}, {"y", l.name(static_cast<int>(hit.y))}},
                             l.name(hit.lhs), l.name(hit.rhs), rel);
}

CheckResult unary_check(const FiniteLattice& l, std::string id,
                        std::function<bool(std::size_t, int&, int&)> eval, Rel rel) {
    for (std::size_t x = 0; x < l.size(); ++x) {
        int lhs = -1, rhs = -1;
        if (!eval(x, lhs, rhs))
            return CheckResult::fail(std::move(id), {{"x", l.name(static_cast<int>(x))}},
                                     l.name(lhs), l.name(rhs), rel);
    }
    return CheckResult::pass(std::move(id));
}

void require_total(const FiniteLattice& l, const std::vector<int>& table, const char* which) {
    if (table.size() != l.size()) throw Error(std::string(which) + " table size does not match the carrier");
    for (int v : table)
        if (v < 0 || static_cast<std::size_t>(v) >= l.size())
            throw Error(std::string(which) + " table entry out of range");
}

} // namespace

AxiomReport check_weak_axioms(const FiniteLattice& l, const std::vector<int>& up) {
    require_total(l, up, "up");
    AxiomReport r;
    r.entries.push_back(unary_check(l, "axiom-1", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = up[static_cast<std::size_t>(up[x])];
        rhs = static_cast<int>(x);
        return l.leq(lhs, rhs);
    }, Rel::LessEqual));
    r.entries.push_back(pair_check(l, "axiom-2", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        int xy = l.meet(static_cast<int>(x), static_cast<int>(y));
        lhs = l.meet(up[static_cast<std::size_t>(xy)], up[y]);
        rhs = up[y];
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(pair_check(l, "axiom-3", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        int xy = l.meet(static_cast<int>(x), static_cast<int>(y));
        lhs = l.join(xy, l.meet(static_cast<int>(x), up[y]));
        rhs = static_cast<int>(x);
        return lhs == rhs;
    }, Rel::Equal));
    return r;
}

AxiomReport check_dual_axioms(const FiniteLattice& l, const std::vector<int>& down) {
    require_total(l, down, "down");
    AxiomReport r;
    r.entries.push_back(unary_check(l, "axiom-1'", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = static_cast<int>(x);
        rhs = down[static_cast<std::size_t>(down[x])];
        return l.leq(lhs, rhs);
    }, Rel::LessEqual));
    r.entries.push_back(pair_check(l, "axiom-2'", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        int xy = l.meet(static_cast<int>(x), static_cast<int>(y));
        lhs = l.meet(down[static_cast<std::size_t>(xy)], down[y]);
        rhs = down[y];
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(pair_check(l, "axiom-3'", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        int xy = l.join(static_cast<int>(x), static_cast<int>(y));
        lhs = l.meet(xy, l.join(static_cast<int>(x), down[y]));
        rhs = static_cast<int>(x);
        return lhs == rhs;
    }, Rel::Equal));
    return r;
}

AxiomReport check_axioms(const FiniteLattice& l, const std::vector<int>& up, const std::vector<int>& down) {
    AxiomReport r = check_weak_axioms(l, up);
    r.append(check_dual_axioms(l, down));
    return r;
}

AxiomReport check_axioms(const Dicomplementation& d) {
    return check_axioms(d.lattice, d.up, d.down);
}

AxiomReport check_derived_properties(const Dicomplementation& d) {
    const FiniteLattice& l = d.lattice;
    const auto& up = d.up;
    const auto& down = d.down;
    AxiomReport r;

    r.entries.push_back(unary_check(l, "property-i", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = l.join(static_cast<int>(x), up[x]);
        rhs = l.top();
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(unary_check(l, "property-ii", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = l.meet(static_cast<int>(x), down[x]);
        rhs = l.bottom();
        return lhs == rhs;
    }, Rel::Equal));

    {
        std::size_t zero = static_cast<std::size_t>(l.bottom());
        bool ok = up[zero] == l.top() && down[zero] == l.top();
        r.entries.push_back(ok ? CheckResult::pass("property-iii")
                               : CheckResult::fail("property-iii", {{"x", l.name(l.bottom())}},
                                                   l.name(up[zero] == l.top() ? down[zero] : up[zero]),
                                                   l.name(l.top()), Rel::Equal));
        std::size_t one = static_cast<std::size_t>(l.top());
        bool ok2 = up[one] == l.bottom() && down[one] == l.bottom();
        r.entries.push_back(ok2 ? CheckResult::pass("property-iv")
                                : CheckResult::fail("property-iv", {{"x", l.name(l.top())}},
                                                    l.name(up[one] == l.bottom() ? down[one] : up[one]),
                                                    l.name(l.bottom()), Rel::Equal));
    }

    r.entries.push_back(unary_check(l, "property-v", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = down[x];
        rhs = up[x];
        return l.leq(lhs, rhs);
    }, Rel::LessEqual));
    r.entries.push_back(pair_check(l, "property-vi", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        lhs = up[static_cast<std::size_t>(l.meet(static_cast<int>(x), static_cast<int>(y)))];
        rhs = l.join(up[x], up[y]);
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(pair_check(l, "property-vii", [&](std::size_t x, std::size_t y, int& lhs, int& rhs) {
        lhs = down[static_cast<std::size_t>(l.join(static_cast<int>(x), static_cast<int>(y)))];
        rhs = l.meet(down[x], down[y]);
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(unary_check(l, "property-viii", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = up[static_cast<std::size_t>(up[static_cast<std::size_t>(up[x])])];
        rhs = up[x];
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(unary_check(l, "property-ix", [&](std::size_t x, int& lhs, int& rhs) {
        lhs = down[static_cast<std::size_t>(down[static_cast<std::size_t>(down[x])])];
        rhs = down[x];
        return lhs == rhs;
    }, Rel::Equal));
    r.entries.push_back(unary_check(l, "property-x", [&](std::size_t x, int& lhs, int& rhs) {
        int upup = up[static_cast<std::size_t>(up[x])];
        int updown = down[static_cast<std::size_t>(up[x])];
        int downdown = down[static_cast<std::size_t>(down[x])];
        int downup = up[static_cast<std::size_t>(down[x])];
        if (!l.leq(updown, upup)) { lhs = updown; rhs = upup; return false; }
        if (!l.leq(upup, static_cast<int>(x))) { lhs = upup; rhs = static_cast<int>(x); return false; }
        if (!l.leq(static_cast<int>(x), downdown)) { lhs = static_cast<int>(x); rhs = downdown; return false; }
        if (!l.leq(downdown, downup)) { lhs = downdown; rhs = downup; return false; }
        return true;
    }, Rel::LessEqual));
    return r;
}

Dicomplementation trivial_dicomplementation(const FiniteLattice& l) {
    std::vector<int> up(l.size()), down(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        if (static_cast<int>(x) == l.bottom()) {
            up[x] = l.top();
            down[x] = l.top();
        } else if (static_cast<int>(x) == l.top()) {
            up[x] = l.bottom();
            down[x] = l.bottom();
        } else {
            up[x] = l.top();
            down[x] = l.bottom();
        }
    }
    return {l, std::move(up), std::move(down)};
}

Dicomplementation from_generators(const FiniteLattice& l, const IndexSet& join_generators,
                                  const IndexSet& meet_generators) {
    IndexSet ji = l.join_irreducibles();
    ji.subtract(join_generators);
    if (!ji.empty()) throw GeneratorSetTooSmall(l.name(ji.first()), true);
    IndexSet mi = l.meet_irreducibles();
    mi.subtract(meet_generators);
    if (!mi.empty()) throw GeneratorSetTooSmall(l.name(mi.first()), false);

    std::vector<int> up(l.size()), down(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        IndexSet nles = join_generators;
        nles.subtract(l.down_set(static_cast<int>(x)));  // {a in G | a not<= x}
        up[x] = l.join_of(nles);
        IndexSet nges = meet_generators;
        nges.subtract(l.up_set(static_cast<int>(x)));    // {m in H | m not>= x}
        down[x] = l.meet_of(nges);
    }
    Dicomplementation d{l, std::move(up), std::move(down)};
    if (!check_axioms(d).all_passed())
        throw InternalContradiction("generator dicomplementation failed the axiom check");
    return d;
}

Dicomplementation boolean_duplication(const FiniteLattice& l) {
    if (auto w = l.distributivity_witness())
        throw NotBoolean("distributivity fails at (" + l.name(w->x) + "," + l.name(w->y) + "," +
                         l.name(w->z) + ")");
    std::vector<int> table(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        auto c = l.complement_of(static_cast<int>(x));
        if (!c) throw NotBoolean(l.name(static_cast<int>(x)) + " has no complement");
        table[x] = *c;
    }
    Dicomplementation d{l, table, table};
    if (!check_axioms(d).all_passed())
        throw InternalContradiction("duplicated complementation failed the axiom check");
    return d;
}

std::optional<Dicomplementation> double_p_tables(const FiniteLattice& l) {
    std::vector<int> up(l.size()), down(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        auto plus = l.dual_pseudocomplement(static_cast<int>(x));
        auto star = l.pseudocomplement(static_cast<int>(x));
        if (!plus || !star) return std::nullopt;
        up[x] = *plus;
        down[x] = *star;
    }
    return Dicomplementation{l, std::move(up), std::move(down)};
}

DerivedBounds derive_bounds(std::size_t n, const std::vector<int>& meet, const std::vector<int>& join,
                            const std::vector<int>& up) {
    if (n == 0) throw NotBounded("empty carrier");
    auto m = [&](int a, int b) { return meet[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };
    auto j = [&](int a, int b) { return join[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };

    // (1)-(3), bounds never consulted: (1) as the equation x^up^up ∨ x = x.
    for (std::size_t x = 0; x < n; ++x) {
        int upup = up[static_cast<std::size_t>(up[x])];
        if (j(upup, static_cast<int>(x)) != static_cast<int>(x))
            throw AxiomViolation("axiom-1", "axiom-1 at index x=" + std::to_string(x));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            int xy = m(static_cast<int>(x), static_cast<int>(y));
            if (m(up[static_cast<std::size_t>(xy)], up[y]) != up[y])
                throw AxiomViolation("axiom-2", "axiom-2 at indices x=" + std::to_string(x) + " y=" + std::to_string(y));
            if (j(xy, m(static_cast<int>(x), up[y])) != static_cast<int>(x))
                throw AxiomViolation("axiom-3", "axiom-3 at indices x=" + std::to_string(x) + " y=" + std::to_string(y));
        }

    int top = j(0, up[0]);
    for (std::size_t x = 0; x < n; ++x)
        if (j(static_cast<int>(x), up[x]) != top)
            throw InternalContradiction("x ∨ x^up is not constant across the carrier");
    for (std::size_t y = 0; y < n; ++y)
        if (j(top, static_cast<int>(y)) != top)
            throw InternalContradiction("derived top is not the maximum");
    int bottom = up[static_cast<std::size_t>(top)];
    for (std::size_t y = 0; y < n; ++y)
        if (m(bottom, static_cast<int>(y)) != bottom)
            throw InternalContradiction("derived bottom is not the minimum");
    return {bottom, top};
}

DerivedBounds derive_bounds(const Dicomplementation& d) {
    // Same checks as the raw-table version, with named witnesses.
    AxiomReport weak = check_weak_axioms(d.lattice, d.up);
    if (const CheckResult* f = weak.first_failure())
        throw AxiomViolation(f->id, to_line(*f).substr(5));  // "axiom-N witness ..."
    std::size_t n = d.lattice.size();
    std::vector<int> meet(n * n), join(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            meet[a * n + b] = d.lattice.meet(static_cast<int>(a), static_cast<int>(b));
            join[a * n + b] = d.lattice.join(static_cast<int>(a), static_cast<int>(b));
        }
    return derive_bounds(n, meet, join, d.up);
}

bool is_with_negation(const Dicomplementation& d) {
    return d.up == d.down;
}

std::optional<BooleanView> boolean_collapse(const Dicomplementation& d) {
    if (!is_with_negation(d)) return std::nullopt;
    const FiniteLattice& l = d.lattice;
    const auto& neg = d.up;

    for (std::size_t x = 0; x < l.size(); ++x) {
        if (l.meet(static_cast<int>(x), neg[x]) != l.bottom() ||
            l.join(static_cast<int>(x), neg[x]) != l.top())
            throw InternalContradiction("negation of " + l.name(static_cast<int>(x)) + " is not a complement");
        for (std::size_t z = 0; z < l.size(); ++z)
            if (l.meet(static_cast<int>(x), static_cast<int>(z)) == l.bottom() &&
                l.join(static_cast<int>(x), static_cast<int>(z)) == l.top() &&
                static_cast<int>(z) != neg[x])
                throw InternalContradiction("complement of " + l.name(static_cast<int>(x)) + " is not unique");
    }
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = 0; y < l.size(); ++y) {
            if (neg[static_cast<std::size_t>(l.meet(static_cast<int>(x), static_cast<int>(y)))] !=
                l.join(neg[x], neg[y]))
                throw InternalContradiction("de Morgan law fails at (" + l.name(static_cast<int>(x)) + "," +
                                            l.name(static_cast<int>(y)) + ")");
            if (neg[static_cast<std::size_t>(l.join(static_cast<int>(x), static_cast<int>(y)))] !=
                l.meet(neg[x], neg[y]))
                throw InternalContradiction("dual de Morgan law fails at (" + l.name(static_cast<int>(x)) + "," +
                                            l.name(static_cast<int>(y)) + ")");
        }
    if (auto w = l.distributivity_witness())
        throw InternalContradiction("distributivity fails at (" + l.name(w->x) + "," + l.name(w->y) + "," +
                                    l.name(w->z) + ")");

    IndexSet atoms(l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
        if (l.lower_covers(static_cast<int>(x)).size() == 1 &&
            l.lower_covers(static_cast<int>(x))[0] == l.bottom())
            atoms.set(x);
    return BooleanView{neg, atoms};
}

IndexSet boolean_part(const Dicomplementation& d) {
    const FiniteLattice& l = d.lattice;
    IndexSet part(l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
        if (d.up[x] == d.down[x]) part.set(x);

    // Subalgebra and Boolean re-verification.
    if (!part.test(static_cast<std::size_t>(l.bottom())) || !part.test(static_cast<std::size_t>(l.top())))
        throw InternalContradiction("Boolean part misses a bound");
    part.for_each([&](int x) {
        part.for_each([&](int y) {
            if (!part.test(static_cast<std::size_t>(l.meet(x, y))) ||
                !part.test(static_cast<std::size_t>(l.join(x, y))))
                throw InternalContradiction("Boolean part is not closed under meet/join");
        });
        if (!part.test(static_cast<std::size_t>(d.up_of(x))) ||
            !part.test(static_cast<std::size_t>(d.down_of(x))))
            throw InternalContradiction("Boolean part is not closed under the unary operations");
    });
    auto [sub, to_old] = l.sublattice(part);
    std::vector<int> old_to_new(l.size(), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i) old_to_new[static_cast<std::size_t>(to_old[i])] = static_cast<int>(i);
    std::vector<int> neg(to_old.size());
    for (std::size_t i = 0; i < to_old.size(); ++i)
        neg[i] = old_to_new[static_cast<std::size_t>(d.up_of(to_old[i]))];
    boolean_collapse(Dicomplementation{sub, neg, neg});  // throws InternalContradiction on failure
    return part;
}

namespace {

IndexSet operation_range(const Dicomplementation& d, const std::vector<int>& table) {
    const FiniteLattice& l = d.lattice;
    IndexSet image(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) image.set(static_cast<std::size_t>(table[x]));
    IndexSet fixed(l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
        if (table[static_cast<std::size_t>(table[x])] == static_cast<int>(x)) fixed.set(x);
    if (image != fixed)
        throw InternalContradiction("operation image differs from its double-application fixed points");
    return image;
}

} // namespace

IndexSet skeleton(const Dicomplementation& d) { return operation_range(d, d.up); }
IndexSet dual_skeleton(const Dicomplementation& d) { return operation_range(d, d.down); }

SkeletonDiagnostics boolean_part_diagnostics(const Dicomplementation& d) {
    const FiniteLattice& l = d.lattice;
    SkeletonDiagnostics out;
    out.boolean_part = boolean_part(d);
    out.skeleton = skeleton(d);
    out.dual_skeleton = dual_skeleton(d);
    out.skeleton_intersection = out.skeleton & out.dual_skeleton;
    out.complemented = l.complemented_elements();

    out.part_equals_intersection = out.boolean_part == out.skeleton_intersection;
    if (!out.part_equals_intersection) {
        IndexSet diff = out.skeleton_intersection;
        diff.subtract(out.boolean_part);
        if (!diff.empty()) out.intersection_minus_part_witness = diff.first();
    }

    out.exchange_condition = true;
    for (std::size_t x = 0; x < l.size() && out.exchange_condition; ++x) {
        int upup = d.up[static_cast<std::size_t>(d.up[x])];
        int downdown = d.down[static_cast<std::size_t>(d.down[x])];
        if (upup == downdown) {
            int updown = d.down[static_cast<std::size_t>(d.up[x])];
            int downup = d.up[static_cast<std::size_t>(d.down[x])];
            if (updown != downup) {
                out.exchange_condition = false;
                out.exchange_witness = static_cast<int>(x);
            }
        }
    }

    out.part_equals_complemented = out.boolean_part == out.complemented;

    auto subalgebra = [&](const IndexSet& s, std::optional<std::string>& witness) {
        bool ok = true;
        s.for_each([&](int x) {
            if (!ok) return;
            if (!s.test(static_cast<std::size_t>(d.up_of(x))) ||
                !s.test(static_cast<std::size_t>(d.down_of(x)))) {
                ok = false;
                witness = l.name(x);
                return;
            }
            s.for_each([&](int y) {
                if (!ok) return;
                if (!s.test(static_cast<std::size_t>(l.meet(x, y))) ||
                    !s.test(static_cast<std::size_t>(l.join(x, y)))) {
                    ok = false;
                    witness = l.name(x) + "," + l.name(y);
                }
            });
        });
        return ok;
    };
    out.skeleton_subalgebra = subalgebra(out.skeleton, out.skeleton_closure_witness);
    out.dual_skeleton_subalgebra = subalgebra(out.dual_skeleton, out.dual_skeleton_closure_witness);

    auto complemented_within = [&](const IndexSet& s) {
        bool ok = true;
        s.for_each([&](int x) {
            if (!ok) return;
            bool has = false;
            s.for_each([&](int z) {
                if (l.meet(x, z) == l.bottom() && l.join(x, z) == l.top()) has = true;
            });
            if (!has) ok = false;
        });
        return ok;
    };
    if (out.skeleton_subalgebra) out.skeleton_complemented = complemented_within(out.skeleton);
    if (out.dual_skeleton_subalgebra) out.dual_skeleton_complemented = complemented_within(out.dual_skeleton);
    return out;
}

} // namespace wdlkit
