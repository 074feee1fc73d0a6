#pragma once

#include <string>
#include <vector>

#include "wdlkit/concept_algebra.hpp"
#include "wdlkit/context.hpp"
#include "wdlkit/dicomplementation.hpp"

namespace wdlkit {

/// Principal generators of the proper primary filters and ideals.
/// ↑x is primary iff for every w, x <= w or x <= w^up; ↓y dually. Filters and
/// ideals are proper: the generator of a filter is never the bottom element
/// and the generator of an ideal is never the top.
struct PrimaryFilterSet {
    std::vector<int> filter_generators;
    std::vector<int> ideal_generators;
};

PrimaryFilterSet primary_filters(const Dicomplementation& d);

/// A primary filter containing ↑filter_gen and disjoint from ↓ideal_gen.
/// Requires filter_gen not<= ideal_gen. Returns the generator of a qualifying
/// filter that is maximal by inclusion, ties broken by element order.
/// Throws TheoremViolation when no qualifying filter exists, which cannot
/// happen on a verified structure.
int extend_to_primary_filter(const Dicomplementation& d, int filter_gen, int ideal_gen);

/// Objects F<gen>, attributes I<gen>, incidence ↑x ∩ ↓y nonempty, i.e. x <= y.
FormalContext canonical_context(const Dicomplementation& d);

/// Verification of the embedding x -> (F_x, I_x) into the concept algebra of
/// the canonical context. All findings are report entries; nothing throws on
/// a mere verification failure.
struct EmbeddingReport {
    struct Row {
        int element = -1;
        IndexSet filters, ideals;   // F_x, I_x as index sets over the generators
        int concept_index = -1;
        bool derivation_ok = false; // F_x' = I_x and I_x' = F_x
        bool chain_ok = false;      // i(x^down) <= i(x)^down <= i(x)^up <= i(x^up)
        bool strict[3] = {false, false, false};  // which of the three gaps is strict
    };

    PrimaryFilterSet generators;
    FormalContext context;
    std::vector<Row> rows;
    bool injective = false;
    bool preserves_meet = false, preserves_join = false, preserves_bounds = false;
    bool derivations_ok = false, chain_ok = false;

    bool all_ok() const {
        return injective && preserves_meet && preserves_join && preserves_bounds &&
               derivations_ok && chain_ok;
    }
};

EmbeddingReport canonical_embedding(const Dicomplementation& d);

std::string to_text(const EmbeddingReport& r);

/// The finite Stone representation of a structure with negation: the concept
/// algebra of the canonical context as the full powerset of the ultrafilter
/// set, with x -> F_x a Boolean embedding. Throws NotWithNegation when
/// up != down; InternalContradiction when any powerset claim fails.
struct StoneView {
    std::vector<int> ultrafilter_generators;
    std::vector<IndexSet> element_image;  // x -> F_x
    std::size_t concept_count = 0;
    bool onto = false;                    // every element image hit, i.e. |L| = 2^u
};

StoneView stone_representation(const Dicomplementation& d);

std::string to_text(const StoneView& v, const Dicomplementation& d);

} // namespace wdlkit
