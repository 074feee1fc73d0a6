#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdlkit/dicomplementation.hpp"
#include "wdlkit/lattice.hpp"

namespace wdlkit {

/// A closure operator on a finite set, stored extensionally as its family of
/// closed sets. Validation: the ground set is closed and the family is closed
/// under pairwise intersection (so arbitrary intersections stay inside).
class ClosureSystem {
public:
    ClosureSystem(std::vector<std::string> ground, std::vector<IndexSet> closed_sets);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<IndexSet>& sets() const { return sets_; }
    std::size_t ground_size() const { return ground_.size(); }

    /// Smallest closed superset.
    IndexSet closure_of(const IndexSet& a) const;

private:
    std::vector<std::string> ground_;
    std::vector<IndexSet> sets_;
};

/// Dual: open-set family closed under pairwise union and containing the
/// empty set; the kernel of the ground set is the union of the family.
class KernelSystem {
public:
    KernelSystem(std::vector<std::string> ground, std::vector<IndexSet> open_sets);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<IndexSet>& sets() const { return sets_; }
    std::size_t ground_size() const { return ground_.size(); }

    /// Largest open subset.
    IndexSet kernel_of(const IndexSet& b) const;

private:
    std::vector<std::string> ground_;
    std::vector<IndexSet> sets_;
};

/// Closed sets ordered by inclusion with A^up = h(X \ A); axioms (1)-(3) are
/// re-verified on construction. Lattice element i is sets[i].
struct ClosedSetLattice {
    FiniteLattice lattice;
    std::vector<IndexSet> sets;
    std::vector<int> up;
};

/// Open sets ordered by inclusion with B^down = k(Y \ B); (1')-(3') verified.
struct OpenSetLattice {
    FiniteLattice lattice;
    std::vector<IndexSet> sets;
    std::vector<int> down;
};

ClosedSetLattice lattice_of_closed_sets(const ClosureSystem& s);
OpenSetLattice lattice_of_open_sets(const KernelSystem& s);

/// The graph of the isomorphism phi (phi[closed index] = open index) with
///   (x,y)^up   = (x^up_h, phi(x^up_h))
///   (x,y)^down = (phi^-1(y^down_k), y^down_k).
/// Throws NotAnIsomorphism when phi is not an order isomorphism.
struct CombinedSystem {
    Dicomplementation dicomp;
    std::vector<std::pair<int, int>> pairs;  // element -> (closed index, open index)
};

CombinedSystem combine_systems(const ClosureSystem& h, const KernelSystem& k, const std::vector<int>& phi);

/// The transported halves: down on the closed-set lattice via
/// x^down = phi^-1(phi(x)^down_k), and up on the open-set lattice via
/// y^up = phi(phi^-1(y)^up_h). Each completed structure passes check_axioms.
struct TransportedTables {
    std::vector<int> down_on_closed;
    std::vector<int> up_on_open;
};

TransportedTables transport_via_isomorphism(const ClosureSystem& h, const KernelSystem& k,
                                            const std::vector<int>& phi);

} // namespace wdlkit
