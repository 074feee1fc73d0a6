#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wdlkit/lattice.hpp"
#include "wdlkit/report.hpp"

namespace wdlkit {

/// A finite lattice carrying a pair of unary operation tables. Plain data:
/// verification lives in check_axioms / check_derived_properties, and the
/// constructors below assert it where the construction guarantees it.
struct Dicomplementation {
    FiniteLattice lattice;
    std::vector<int> up;    // x -> x^up   (weak complement candidate)
    std::vector<int> down;  // x -> x^down (dual weak complement candidate)

    int up_of(int x) const { return up[static_cast<std::size_t>(x)]; }
    int down_of(int x) const { return down[static_cast<std::size_t>(x)]; }
};

/// Axioms on the up table alone:
///   (1) x^up^up <= x
///   (2) (x∧y)^up ∧ y^up = y^up      (equational antitonicity)
///   (3) (x∧y) ∨ (x∧y^up) = x
AxiomReport check_weak_axioms(const FiniteLattice& l, const std::vector<int>& up);

/// The duals (1')-(3') on the down table alone.
AxiomReport check_dual_axioms(const FiniteLattice& l, const std::vector<int>& down);

/// All six axioms; entries axiom-1, axiom-2, axiom-3, axiom-1', axiom-2',
/// axiom-3', each exhaustive over all element pairs.
AxiomReport check_axioms(const FiniteLattice& l, const std::vector<int>& up, const std::vector<int>& down);
AxiomReport check_axioms(const Dicomplementation& d);

/// Derived properties (i)-(x); the input is expected to pass check_axioms.
///   (i) x ∨ x^up = 1        (ii) x ∧ x^down = 0
///   (iii) 0^up = 1 = 0^down (iv) 1^up = 0 = 1^down
///   (v) x^down <= x^up
///   (vi) (x∧y)^up = x^up ∨ y^up    (vii) (x∨y)^down = x^down ∧ y^down
///   (viii) x^up^up^up = x^up       (ix) x^down^down^down = x^down
///   (x) x^up^down <= x^up^up <= x <= x^down^down <= x^down^up
AxiomReport check_derived_properties(const Dicomplementation& d);

/// 0 -> (1,1), 1 -> (0,0), everything else -> (1,0).
Dicomplementation trivial_dicomplementation(const FiniteLattice& l);

/// x^up = join of {a in G | a not<= x}, x^down = meet of {m in H | m not>= x},
/// for G ⊇ J(L) and H ⊇ M(L). Throws GeneratorSetTooSmall otherwise; the
/// result is asserted to pass check_axioms.
Dicomplementation from_generators(const FiniteLattice& l, const IndexSet& join_generators,
                                  const IndexSet& meet_generators);

/// up = down = the unique complement. Throws NotBoolean when the lattice is
/// not complemented or not distributive.
Dicomplementation boolean_duplication(const FiniteLattice& l);

/// The (dual pseudocomplement, pseudocomplement) pair, when every element has
/// both. No axiom check: the pair may fail to be a weak dicomplementation.
std::optional<Dicomplementation> double_p_tables(const FiniteLattice& l);

struct DerivedBounds {
    int bottom, top;
};

/// Bound recovery from the tables alone: verifies axioms (1)-(3) first
/// (equationally, no bounds consulted), then returns top = x ∨ x^up for an
/// arbitrary x and bottom = top^up, asserting that the top value is the same
/// for every x, that it is the maximum, and that the bottom is the minimum.
/// Throws AxiomViolation when (1)-(3) fail.
DerivedBounds derive_bounds(std::size_t n, const std::vector<int>& meet, const std::vector<int>& join,
                            const std::vector<int>& up);
DerivedBounds derive_bounds(const Dicomplementation& d);

bool is_with_negation(const Dicomplementation& d);

struct BooleanView {
    std::vector<int> complement;
    IndexSet atoms;
};

/// When up = down pointwise, re-verifies unique complementation, the
/// de Morgan laws and distributivity and returns the Boolean structure;
/// absent when up != down. A verification failure on a verified
/// dicomplementation throws InternalContradiction.
std::optional<BooleanView> boolean_collapse(const Dicomplementation& d);

/// B(L) = {x | x^up = x^down}. Re-verifies that B(L) is a subalgebra
/// containing the bounds and that the induced structure is Boolean.
IndexSet boolean_part(const Dicomplementation& d);

/// L^up, computed both as the image of up and as its fixed points under
/// double application; the two are asserted equal.
IndexSet skeleton(const Dicomplementation& d);
IndexSet dual_skeleton(const Dicomplementation& d);

struct SkeletonDiagnostics {
    IndexSet boolean_part, skeleton, dual_skeleton, skeleton_intersection, complemented;
    bool part_equals_intersection = false;
    std::optional<int> intersection_minus_part_witness;  // strictness witness

    /// x^up^up = x^down^down implies x^up^down = x^down^up, tested everywhere;
    /// equivalent to part_equals_intersection.
    bool exchange_condition = false;
    std::optional<int> exchange_witness;

    bool part_equals_complemented = false;

    bool skeleton_subalgebra = false, dual_skeleton_subalgebra = false;
    std::optional<std::string> skeleton_closure_witness, dual_skeleton_closure_witness;
    bool skeleton_complemented = false, dual_skeleton_complemented = false;
};

SkeletonDiagnostics boolean_part_diagnostics(const Dicomplementation& d);

} // namespace wdlkit
