#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "wdlkit/context.hpp"
#include "wdlkit/lattice.hpp"

namespace wdlkit {

/// (A, B) with A' = B and B' = A; both halves are validated on construction
/// against the owning context by the factory below.
struct FormalConcept {
    IndexSet extent, intent;
};

/// All concepts of one context, in lectic (NextClosure) discovery order, with
/// the subconcept order realized as a FiniteLattice whose element i is
/// concept i. Index 0 is the least concept, the last index the greatest.
class ConceptLatticeView {
public:
    ConceptLatticeView(FormalContext context, std::vector<FormalConcept> concepts);

    const FormalContext& context() const { return context_; }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }
    std::size_t concept_count() const { return concepts_.size(); }
    const FormalConcept& concept_at(int i) const { return concepts_[static_cast<std::size_t>(i)]; }
    const FiniteLattice& lattice() const { return lattice_; }

    int index_of_extent(const IndexSet& extent) const;  // -1 when not an extent
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(concepts_.size()) - 1; }

    int object_concept_index(int g) const;
    int attribute_concept_index(int m) const;

    /// Meet and join by the concept-lattice formulas: intersection of extents
    /// closed on the intent side and dually. Empty input yields top / bottom.
    FormalConcept meet_of(const std::vector<int>& members) const;
    FormalConcept join_of(const std::vector<int>& members) const;

private:
    FormalContext context_;
    std::vector<FormalConcept> concepts_;
    FiniteLattice lattice_;
    std::unordered_map<IndexSet, int, IndexSetHash> extent_index_;
};

/// NextClosure over extents in lectic order w.r.t. the context's object order.
ConceptLatticeView enumerate_concepts(const FormalContext& k);

/// (J(L), M(L), <=). Object and attribute names are the element names.
FormalContext standard_context(const FiniteLattice& l);

/// True iff every concept is a join of `gamma_images` and a meet of
/// `mu_images` (both are concept-index sets; the empty join is the bottom).
bool density_check(const ConceptLatticeView& view, const IndexSet& gamma_images, const IndexSet& mu_images);

/// Drops objects with join-reducible object concepts and attributes with
/// meet-reducible attribute concepts; the concept lattice is unchanged up to
/// isomorphism. Expects a clarified context.
FormalContext reduce(const FormalContext& k);

/// Concept lattice as a DOT digraph, edges = upward covers. Reduced labeling
/// marks each node with only the objects/attributes introduced there.
std::string to_dot(const ConceptLatticeView& view, bool reduced_labels = false);

} // namespace wdlkit
