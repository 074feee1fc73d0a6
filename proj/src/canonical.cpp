#include "wdlkit/canonical.hpp"

#include <algorithm>

namespace wdlkit {

namespace {

/// ↑x is a proper primary filter: x != 0 and every w has w in ↑x (x <= w) or
/// w^up in ↑x (x <= w^up).
bool is_primary_filter_gen(const Dicomplementation& d, int x) {
    const FiniteLattice& l = d.lattice;
    if (x == l.bottom()) return false;
    for (std::size_t w = 0; w < l.size(); ++w)
        if (!l.leq(x, static_cast<int>(w)) && !l.leq(x, d.up_of(static_cast<int>(w))))
            return false;
    return true;
}

bool is_primary_ideal_gen(const Dicomplementation& d, int y) {
    const FiniteLattice& l = d.lattice;
    if (y == l.top()) return false;
    for (std::size_t w = 0; w < l.size(); ++w)
        if (!l.leq(static_cast<int>(w), y) && !l.leq(d.down_of(static_cast<int>(w)), y))
            return false;
    return true;
}

} // namespace

PrimaryFilterSet primary_filters(const Dicomplementation& d) {
    PrimaryFilterSet out;
    for (std::size_t x = 0; x < d.lattice.size(); ++x)
        if (is_primary_filter_gen(d, static_cast<int>(x))) out.filter_generators.push_back(static_cast<int>(x));
    for (std::size_t y = 0; y < d.lattice.size(); ++y)
        if (is_primary_ideal_gen(d, static_cast<int>(y))) out.ideal_generators.push_back(static_cast<int>(y));
    return out;
}

int extend_to_primary_filter(const Dicomplementation& d, int filter_gen, int ideal_gen) {
    const FiniteLattice& l = d.lattice;
    if (l.leq(filter_gen, ideal_gen))
        throw Error("filter and ideal are not disjoint: " + l.name(filter_gen) + " <= " + l.name(ideal_gen));

    // ↑x ⊇ ↑filter_gen means x <= filter_gen; disjoint from ↓ideal_gen means
    // x not<= ideal_gen. Maximal filters have minimal generators.
    std::vector<int> qualifying;
    for (std::size_t x = 0; x < l.size(); ++x)
        if (l.leq(static_cast<int>(x), filter_gen) && !l.leq(static_cast<int>(x), ideal_gen) &&
            is_primary_filter_gen(d, static_cast<int>(x)))
            qualifying.push_back(static_cast<int>(x));
    if (qualifying.empty())
        throw TheoremViolation("no primary filter extends " + l.name(filter_gen) +
                               " away from " + l.name(ideal_gen));
    for (int x : qualifying) {
        bool minimal = true;
        for (int z : qualifying)
            if (z != x && l.leq(z, x)) minimal = false;
        if (minimal) return x;
    }
    return qualifying.front();  // unreachable: some element of a finite set is minimal
}

FormalContext canonical_context(const Dicomplementation& d) {
    PrimaryFilterSet gens = primary_filters(d);
    const FiniteLattice& l = d.lattice;
    std::vector<std::string> objects, attributes;
    for (int x : gens.filter_generators) objects.push_back("F" + l.name(x));
    for (int y : gens.ideal_generators) attributes.push_back("I" + l.name(y));
    std::vector<IndexSet> rows;
    for (int x : gens.filter_generators) {
        IndexSet row(gens.ideal_generators.size());
        for (std::size_t j = 0; j < gens.ideal_generators.size(); ++j)
            if (l.leq(x, gens.ideal_generators[j])) row.set(j);  // ↑x ∩ ↓y nonempty iff x <= y
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

EmbeddingReport canonical_embedding(const Dicomplementation& d) {
    const FiniteLattice& l = d.lattice;
    EmbeddingReport r;
    r.generators = primary_filters(d);
    r.context = canonical_context(d);

    ConceptAlgebraView algebra = build_concept_algebra(r.context);
    const ConceptLatticeView& view = algebra.base();

    const auto& fg = r.generators.filter_generators;
    const auto& ig = r.generators.ideal_generators;

    r.derivations_ok = true;
    r.chain_ok = true;
    for (std::size_t x = 0; x < l.size(); ++x) {
        EmbeddingReport::Row row;
        row.element = static_cast<int>(x);
        row.filters = IndexSet(fg.size());
        row.ideals = IndexSet(ig.size());
        for (std::size_t i = 0; i < fg.size(); ++i)
            if (l.leq(fg[i], static_cast<int>(x))) row.filters.set(i);  // x in ↑g iff g <= x
        for (std::size_t j = 0; j < ig.size(); ++j)
            if (l.leq(static_cast<int>(x), ig[j])) row.ideals.set(j);   // x in ↓h iff x <= h

        row.derivation_ok = r.context.intent_of(row.filters) == row.ideals &&
                            r.context.extent_of(row.ideals) == row.filters;
        row.concept_index = view.index_of_extent(row.filters);

        if (row.concept_index >= 0) {
            const FiniteLattice& cl = view.lattice();
            int ix = row.concept_index;
            int down_of_image = algebra.weak_opposition_of(ix);
            int up_of_image = algebra.weak_negation_of(ix);
            IndexSet f_down(fg.size()), f_up(fg.size());
            for (std::size_t i = 0; i < fg.size(); ++i) {
                if (l.leq(fg[i], d.down_of(static_cast<int>(x)))) f_down.set(i);
                if (l.leq(fg[i], d.up_of(static_cast<int>(x)))) f_up.set(i);
            }
            int image_of_down = view.index_of_extent(f_down);
            int image_of_up = view.index_of_extent(f_up);
            row.chain_ok = image_of_down >= 0 && image_of_up >= 0 &&
                           cl.leq(image_of_down, down_of_image) &&
                           cl.leq(down_of_image, up_of_image) &&
                           cl.leq(up_of_image, image_of_up);
            if (row.chain_ok) {
                row.strict[0] = image_of_down != down_of_image;
                row.strict[1] = down_of_image != up_of_image;
                row.strict[2] = up_of_image != image_of_up;
            }
        }
        r.derivations_ok = r.derivations_ok && row.derivation_ok;
        r.chain_ok = r.chain_ok && row.chain_ok;
        r.rows.push_back(std::move(row));
    }

    r.injective = true;
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = x + 1; y < l.size(); ++y)
            if (r.rows[x].concept_index == r.rows[y].concept_index) r.injective = false;

    r.preserves_meet = true;
    r.preserves_join = true;
    const FiniteLattice& cl = view.lattice();
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = 0; y < l.size(); ++y) {
            int cx = r.rows[x].concept_index, cy = r.rows[y].concept_index;
            if (cx < 0 || cy < 0) {
                r.preserves_meet = r.preserves_join = false;
                break;
            }
            int cm = r.rows[static_cast<std::size_t>(l.meet(static_cast<int>(x), static_cast<int>(y)))].concept_index;
            int cj = r.rows[static_cast<std::size_t>(l.join(static_cast<int>(x), static_cast<int>(y)))].concept_index;
            if (cl.meet(cx, cy) != cm) r.preserves_meet = false;
            if (cl.join(cx, cy) != cj) r.preserves_join = false;
        }
    r.preserves_bounds =
        r.rows[static_cast<std::size_t>(l.bottom())].concept_index == view.bottom() &&
        r.rows[static_cast<std::size_t>(l.top())].concept_index == view.top();
    return r;
}

std::string to_text(const EmbeddingReport& r) {
    std::string out;
    out += "filters " + std::to_string(r.generators.filter_generators.size()) +
           " ideals " + std::to_string(r.generators.ideal_generators.size()) + "\n";
    for (const auto& row : r.rows) {
        out += "element " + std::to_string(row.element) +
               " concept " + std::to_string(row.concept_index) +
               " derivation " + (row.derivation_ok ? "ok" : "FAIL") +
               " chain " + (row.chain_ok ? "ok" : "FAIL");
        if (row.chain_ok) {
            out += " gaps";
            for (bool s : row.strict) out += s ? " strict" : " equal";
        }
        out += "\n";
    }
    out += std::string("injective ") + (r.injective ? "ok" : "FAIL") + "\n";
    out += std::string("meet ") + (r.preserves_meet ? "ok" : "FAIL") + "\n";
    out += std::string("join ") + (r.preserves_join ? "ok" : "FAIL") + "\n";
    out += std::string("bounds ") + (r.preserves_bounds ? "ok" : "FAIL") + "\n";
    out += std::string("embedding ") + (r.all_ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

StoneView stone_representation(const Dicomplementation& d) {
    if (!is_with_negation(d)) {
        for (std::size_t x = 0; x < d.lattice.size(); ++x)
            if (d.up[x] != d.down[x]) throw NotWithNegation(d.lattice.name(static_cast<int>(x)));
    }
    const FiniteLattice& l = d.lattice;
    EmbeddingReport emb = canonical_embedding(d);
    if (!emb.all_ok()) throw InternalContradiction("canonical embedding failed on a structure with negation");

    StoneView v;
    v.ultrafilter_generators = emb.generators.filter_generators;
    std::size_t u = v.ultrafilter_generators.size();

    ConceptAlgebraView algebra = build_concept_algebra(emb.context);
    v.concept_count = algebra.base().concept_count();
    if (v.concept_count != (std::size_t{1} << u))
        throw InternalContradiction("canonical concept count is not 2^ultrafilters");

    // Every subset of the ultrafilter set is an extent, and weak negation is
    // set complement on extents.
    for (std::size_t mask = 0; mask < (std::size_t{1} << u); ++mask) {
        IndexSet subset(u);
        for (std::size_t i = 0; i < u; ++i)
            if (mask & (std::size_t{1} << i)) subset.set(i);
        int ci = algebra.base().index_of_extent(subset);
        if (ci < 0) throw InternalContradiction("a subset of the ultrafilter set is not an extent");
        int nci = algebra.weak_negation_of(ci);
        if (algebra.base().concept_at(nci).extent != subset.complement())
            throw InternalContradiction("weak negation is not set complement on extents");
        if (algebra.weak_opposition_of(ci) != nci)
            throw InternalContradiction("weak opposition differs from weak negation on the powerset");
    }

    for (std::size_t x = 0; x < l.size(); ++x) {
        v.element_image.push_back(emb.rows[x].filters);
        // Boolean embedding: complements map to set complements.
        if (emb.rows[static_cast<std::size_t>(d.up[x])].filters != emb.rows[x].filters.complement())
            throw InternalContradiction("embedding does not preserve complement at " +
                                        l.name(static_cast<int>(x)));
    }
    v.onto = l.size() == v.concept_count;
    return v;
}

std::string to_text(const StoneView& v, const Dicomplementation& d) {
    std::string out = "ultrafilters " + std::to_string(v.ultrafilter_generators.size()) + ":";
    for (int g : v.ultrafilter_generators) out += " " + d.lattice.name(g);
    out += "\nconcepts " + std::to_string(v.concept_count) + "\n";
    for (std::size_t x = 0; x < v.element_image.size(); ++x)
        out += d.lattice.name(static_cast<int>(x)) + " -> " +
               format_set(v.element_image[x],
                          [&](int i) { return d.lattice.name(v.ultrafilter_generators[static_cast<std::size_t>(i)]); }) +
               "\n";
    out += std::string("onto ") + (v.onto ? "yes" : "no") + "\n";
    return out;
}

} // namespace wdlkit
