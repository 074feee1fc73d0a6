#pragma once

#include <string>
#include <vector>

#include "wdlkit/concepts.hpp"
#include "wdlkit/dicomplementation.hpp"

namespace wdlkit {

/// Weak negation: the concept generated by the complement of the extent.
FormalConcept weak_negation(const FormalContext& k, const FormalConcept& c);
/// Weak opposition: the concept generated by the complement of the intent.
FormalConcept weak_opposition(const FormalContext& k, const FormalConcept& c);

/// A concept lattice together with the weak negation / weak opposition
/// tables. The axiom check runs eagerly at construction and its report is
/// kept; construction fails if any axiom or derived property does not hold.
class ConceptAlgebraView {
public:
    explicit ConceptAlgebraView(ConceptLatticeView base);

    const ConceptLatticeView& base() const { return base_; }
    const std::vector<int>& up_table() const { return up_; }
    const std::vector<int>& down_table() const { return down_; }
    const AxiomReport& report() const { return report_; }

    int weak_negation_of(int ci) const { return up_[static_cast<std::size_t>(ci)]; }
    int weak_opposition_of(int ci) const { return down_[static_cast<std::size_t>(ci)]; }

    /// Carrier copy with both tables, for the lattice-level machinery.
    Dicomplementation as_dicomplementation() const;

    /// One line per concept: "i: up=j down=k extent={...} intent={...}".
    std::string table_dump() const;

private:
    ConceptLatticeView base_;
    std::vector<int> up_, down_;
    AxiomReport report_;
};

ConceptAlgebraView build_concept_algebra(const FormalContext& k);

} // namespace wdlkit
