#include "wdlkit/concepts.hpp"

#include <algorithm>

namespace wdlkit {

ConceptLatticeView::ConceptLatticeView(FormalContext context, std::vector<FormalConcept> concepts)
    : context_(std::move(context)), concepts_(std::move(concepts)),
      lattice_(FiniteLattice::chain(1)) {
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        const auto& c = concepts_[i];
        if (context_.intent_of(c.extent) != c.intent || context_.extent_of(c.intent) != c.extent)
            throw Error("not a formal concept: derivation mismatch at index " + std::to_string(i));
        extent_index_[c.extent] = static_cast<int>(i);
    }
    if (extent_index_.size() != concepts_.size()) throw Error("duplicate concept in view");

    std::vector<std::string> names;
    names.reserve(concepts_.size());
    for (std::size_t i = 0; i < concepts_.size(); ++i) names.push_back("c" + std::to_string(i));
    std::vector<IndexSet> below(concepts_.size(), IndexSet(concepts_.size()));
    for (std::size_t i = 0; i < concepts_.size(); ++i)
        for (std::size_t j = 0; j < concepts_.size(); ++j)
            if (concepts_[j].extent.contains(concepts_[i].extent)) below[j].set(i);
    lattice_ = FiniteLattice::from_order(std::move(names), std::move(below));
}

int ConceptLatticeView::index_of_extent(const IndexSet& extent) const {
    auto it = extent_index_.find(extent);
    return it == extent_index_.end() ? -1 : it->second;
}

int ConceptLatticeView::object_concept_index(int g) const {
    auto [extent, intent] = context_.object_concept(g);
    return index_of_extent(extent);
}

int ConceptLatticeView::attribute_concept_index(int m) const {
    auto [extent, intent] = context_.attribute_concept(m);
    return index_of_extent(extent);
}

FormalConcept ConceptLatticeView::meet_of(const std::vector<int>& members) const {
    IndexSet extent = IndexSet::full(context_.object_count());
    IndexSet intents(context_.attribute_count());
    for (int i : members) {
        extent &= concepts_[static_cast<std::size_t>(i)].extent;
        intents |= concepts_[static_cast<std::size_t>(i)].intent;
    }
    return {extent, context_.intent_closure(intents)};
}

FormalConcept ConceptLatticeView::join_of(const std::vector<int>& members) const {
    IndexSet extents(context_.object_count());
    IndexSet intent = IndexSet::full(context_.attribute_count());
    for (int i : members) {
        extents |= concepts_[static_cast<std::size_t>(i)].extent;
        intent &= concepts_[static_cast<std::size_t>(i)].intent;
    }
    return {context_.extent_closure(extents), intent};
}

ConceptLatticeView enumerate_concepts(const FormalContext& k) {
    std::size_t n = k.object_count();
    std::vector<FormalConcept> concepts;

    IndexSet extent = k.extent_closure(IndexSet(n));
    concepts.push_back({extent, k.intent_of(extent)});
    while (true) {
        bool advanced = false;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            if (extent.test(static_cast<std::size_t>(i))) continue;
            IndexSet seed(n);
            extent.for_each([&](int g) {
                if (g < i) seed.set(static_cast<std::size_t>(g));
            });
            seed.set(static_cast<std::size_t>(i));
            IndexSet closed = k.extent_closure(seed);
            // Lectic canonicity: nothing new below position i.
            if (closed.subset_below(extent, static_cast<std::size_t>(i))) {
                extent = std::move(closed);
                concepts.push_back({extent, k.intent_of(extent)});
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return ConceptLatticeView(k, std::move(concepts));
}

FormalContext standard_context(const FiniteLattice& l) {
    std::vector<int> objs = l.join_irreducibles().elements();
    std::vector<int> attrs = l.meet_irreducibles().elements();
    std::vector<std::string> onames, anames;
    for (int j : objs) onames.push_back(l.name(j));
    for (int m : attrs) anames.push_back(l.name(m));
    std::vector<IndexSet> rows;
    for (int j : objs) {
        IndexSet row(attrs.size());
        for (std::size_t mi = 0; mi < attrs.size(); ++mi)
            if (l.leq(j, attrs[mi])) row.set(mi);
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

bool density_check(const ConceptLatticeView& view, const IndexSet& gamma_images, const IndexSet& mu_images) {
    const FiniteLattice& lat = view.lattice();
    for (std::size_t c = 0; c < view.concept_count(); ++c) {
        IndexSet lower = gamma_images & lat.down_set(static_cast<int>(c));
        if (lat.join_of(lower) != static_cast<int>(c)) return false;
        IndexSet upper = mu_images & lat.up_set(static_cast<int>(c));
        if (lat.meet_of(upper) != static_cast<int>(c)) return false;
    }
    return true;
}

FormalContext reduce(const FormalContext& k) {
    ConceptLatticeView view = enumerate_concepts(k);
    const FiniteLattice& lat = view.lattice();
    IndexSet ji = lat.join_irreducibles();
    IndexSet mi = lat.meet_irreducibles();

    std::vector<std::string> onames, anames;
    std::vector<int> objs, attrs;
    for (std::size_t g = 0; g < k.object_count(); ++g)
        if (ji.test(static_cast<std::size_t>(view.object_concept_index(static_cast<int>(g))))) {
            objs.push_back(static_cast<int>(g));
            onames.push_back(k.object_name(static_cast<int>(g)));
        }
    for (std::size_t m = 0; m < k.attribute_count(); ++m)
        if (mi.test(static_cast<std::size_t>(view.attribute_concept_index(static_cast<int>(m))))) {
            attrs.push_back(static_cast<int>(m));
            anames.push_back(k.attribute_name(static_cast<int>(m)));
        }

    std::vector<IndexSet> rows;
    for (int g : objs) {
        IndexSet row(attrs.size());
        for (std::size_t mi2 = 0; mi2 < attrs.size(); ++mi2)
            if (k.incident(g, attrs[mi2])) row.set(mi2);
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

std::string to_dot(const ConceptLatticeView& view, bool reduced_labels) {
    const FormalContext& k = view.context();
    const FiniteLattice& lat = view.lattice();
    std::string out = "digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < view.concept_count(); ++i) {
        std::string ext, intn;
        if (reduced_labels) {
            IndexSet objs(k.object_count()), atts(k.attribute_count());
            for (std::size_t g = 0; g < k.object_count(); ++g)
                if (view.object_concept_index(static_cast<int>(g)) == static_cast<int>(i)) objs.set(g);
            for (std::size_t m = 0; m < k.attribute_count(); ++m)
                if (view.attribute_concept_index(static_cast<int>(m)) == static_cast<int>(i)) atts.set(m);
            ext = format_set(objs, [&](int g) { return k.object_name(g); });
            intn = format_set(atts, [&](int m) { return k.attribute_name(m); });
        } else {
            ext = format_set(view.concept_at(static_cast<int>(i)).extent, [&](int g) { return k.object_name(g); });
            intn = format_set(view.concept_at(static_cast<int>(i)).intent, [&](int m) { return k.attribute_name(m); });
        }
        out += "  n" + std::to_string(i) + " [label=\"" + ext + "|" + intn + "\"];\n";
    }
    for (std::size_t i = 0; i < view.concept_count(); ++i)
        for (int up : lat.upper_covers(static_cast<int>(i)))
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(up) + ";\n";
    out += "}\n";
    return out;
}

} // namespace wdlkit
