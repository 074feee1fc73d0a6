#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wdlkit/errors.hpp"
#include "wdlkit/index_set.hpp"

namespace wdlkit {

struct DistributivityWitness {
    int x, y, z;
};

/// A finite bounded lattice stored as an explicit order relation with
/// precomputed meet and join tables. Elements are indices into a frozen name
/// list; every operation below is a pure table lookup or a bit-set scan.
/// Immutable after construction.
class FiniteLattice {
public:
    /// Order = reflexive-transitive closure of the cover pairs. Throws
    /// CycleDetected, NotALattice (with the witness pair) or NotBounded.
    static FiniteLattice from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<std::string, std::string>>& covers);

    /// below[i] = {j | j <= i}, already reflexive and transitive.
    static FiniteLattice from_order(std::vector<std::string> names, std::vector<IndexSet> below);

    static FiniteLattice chain(std::size_t n);

    /// Powerset of `atoms` generators ordered by inclusion. Elements are named
    /// 0, 1 for the bounds and by concatenated atom letters in between.
    static FiniteLattice boolean_cube(std::size_t atoms);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int index_of(std::string_view name) const;  // throws OutOfRange

    bool leq(int a, int b) const { return below_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
    int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
    int meet_of(const IndexSet& s) const;  // empty set -> top
    int join_of(const IndexSet& s) const;  // empty set -> bottom
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    const IndexSet& down_set(int x) const { return below_[static_cast<std::size_t>(x)]; }
    const IndexSet& up_set(int x) const { return above_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return lower_covers_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& upper_covers(int x) const { return upper_covers_[static_cast<std::size_t>(x)]; }

    /// J(L): exactly one lower cover (bottom never qualifies).
    IndexSet join_irreducibles() const;
    /// M(L): exactly one upper cover (top never qualifies).
    IndexSet meet_irreducibles() const;

    /// Maximum of {y | x ∧ y = 0}, when that set has one.
    std::optional<int> pseudocomplement(int x) const;
    /// Minimum of {y | x ∨ y = 1}, when that set has one.
    std::optional<int> dual_pseudocomplement(int x) const;

    /// First triple with x∧(y∨z) != (x∧y)∨(x∧z), scanning in index order.
    std::optional<DistributivityWitness> distributivity_witness() const;
    bool is_distributive() const { return !distributivity_witness().has_value(); }

    /// C(L) = {x | ∃z: x∧z=0 and x∨z=1}.
    IndexSet complemented_elements() const;
    std::optional<int> complement_of(int x) const;

    int height(int x) const { return height_[static_cast<std::size_t>(x)]; }  // longest chain below x
    int depth(int x) const { return depth_[static_cast<std::size_t>(x)]; }    // longest chain above x

    /// Sublattice induced on `members`; throws if not closed under meet/join.
    /// Second component maps new indices back to the original ones.
    std::pair<FiniteLattice, std::vector<int>> sublattice(const IndexSet& members) const;

    /// Row-major leq bits packed into words; used for canonical forms.
    std::vector<std::uint64_t> order_encoding() const;

    /// Carrier relabeled by perm (new index = perm[old index]).
    FiniteLattice relabeled(const std::vector<int>& perm, std::vector<std::string> new_names) const;

private:
    FiniteLattice() = default;
    void finalize();  // covers, tables, bounds, heights; throws on non-lattices

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<IndexSet> below_, above_;
    std::vector<int> meet_, join_;
    std::vector<std::vector<int>> lower_covers_, upper_covers_;
    std::vector<int> height_, depth_;
    int bottom_ = -1, top_ = -1;
};

/// Order isomorphism search by invariant-refined backtracking. Also valid as
/// a lattice isomorphism: an order bijection between lattices preserves the
/// meet and join tables, which the implementation re-checks before returning.
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

} // namespace wdlkit
