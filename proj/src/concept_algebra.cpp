#include "wdlkit/concept_algebra.hpp"

namespace wdlkit {

FormalConcept weak_negation(const FormalContext& k, const FormalConcept& c) {
    IndexSet rest = c.extent.complement();
    return {k.extent_closure(rest), k.intent_of(rest)};
}

FormalConcept weak_opposition(const FormalContext& k, const FormalConcept& c) {
    IndexSet rest = c.intent.complement();
    return {k.extent_of(rest), k.intent_closure(rest)};
}

ConceptAlgebraView::ConceptAlgebraView(ConceptLatticeView base) : base_(std::move(base)) {
    const FormalContext& k = base_.context();
    up_.resize(base_.concept_count());
    down_.resize(base_.concept_count());
    for (std::size_t i = 0; i < base_.concept_count(); ++i) {
        up_[i] = base_.index_of_extent(weak_negation(k, base_.concept_at(static_cast<int>(i))).extent);
        down_[i] = base_.index_of_extent(weak_opposition(k, base_.concept_at(static_cast<int>(i))).extent);
        if (up_[i] < 0 || down_[i] < 0)
            throw InternalContradiction("weak negation or opposition left the concept set");
    }
    report_ = check_axioms(base_.lattice(), up_, down_);
    report_.append(check_derived_properties(as_dicomplementation()));
    if (!report_.all_passed())
        throw InternalContradiction("concept algebra failed the axiom check: " +
                                    report_.first_failure()->id);
}

Dicomplementation ConceptAlgebraView::as_dicomplementation() const {
    return {base_.lattice(), up_, down_};
}

std::string ConceptAlgebraView::table_dump() const {
    const FormalContext& k = base_.context();
    std::string out;
    for (std::size_t i = 0; i < base_.concept_count(); ++i) {
        const FormalConcept& c = base_.concept_at(static_cast<int>(i));
        out += std::to_string(i) + ": up=" + std::to_string(up_[i]) + " down=" + std::to_string(down_[i]) +
               " extent=" + format_set(c.extent, [&](int g) { return k.object_name(g); }) +
               " intent=" + format_set(c.intent, [&](int m) { return k.attribute_name(m); }) + "\n";
    }
    return out;
}

ConceptAlgebraView build_concept_algebra(const FormalContext& k) {
    return ConceptAlgebraView(enumerate_concepts(k));
}

} // namespace wdlkit
