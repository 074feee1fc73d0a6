#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdlkit/dicomplementation.hpp"
#include "wdlkit/lattice.hpp"

namespace wdlkit {

/// All lattices with n elements up to isomorphism, each in its canonical
/// labeling (bottom first, top last, order matrix minimal), sorted by the
/// canonical order-matrix encoding. This order is frozen: search results
/// below are defined in terms of it. Hard cap n <= 8.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n);

/// All up tables satisfying axioms (1)-(3) / all down tables satisfying
/// (1')-(3'), in lexicographic table order. Cap |L| <= 6.
std::vector<std::vector<int>> enumerate_weak_complementations(const FiniteLattice& l);
std::vector<std::vector<int>> enumerate_dual_weak_complementations(const FiniteLattice& l);

/// Every (up, down) pair passing the full axiom check: the axioms do not mix
/// the two tables, so this is the cross product of the two lists above, up
/// table varying slowest. Cap |L| <= 6.
std::vector<Dicomplementation> enumerate_dicomplementations(const FiniteLattice& l);

struct Counterexample {
    Dicomplementation structure;
    std::string description;
};

/// Registered predicates for find_counterexample.
const std::vector<std::string>& counterexample_properties();

/// First structure in enumeration order (lattices in the frozen order, then
/// dicomplementations in table order) satisfying the named predicate.
/// Throws UnknownProperty for unregistered names.
std::optional<Counterexample> find_counterexample(std::string_view property, std::size_t max_size);

/// Same predicates over an explicit candidate list (e.g. file fixtures).
std::optional<Counterexample> find_counterexample_in(std::string_view property,
                                                     const std::vector<Dicomplementation>& candidates);

} // namespace wdlkit
