#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "wdlkit/concepts.hpp"
#include "wdlkit/enumerate.hpp"
#include "wdlkit/io.hpp"

using namespace wdlkit;
using namespace wdlkit::testing;

namespace {

/// Independent concept counter: every A ⊆ G with A'' = A.
std::size_t brute_force_concept_count(const FormalContext& k) {
    std::size_t g = k.object_count();
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
        IndexSet a(g);
        for (std::size_t i = 0; i < g; ++i)
            if (mask & (std::size_t{1} << i)) a.set(i);
        if (k.extent_closure(a) == a) ++count;
    }
    return count;
}

FormalContext pair_context() {
    return FormalContext({"g1", "g2"}, {"m1", "m2"},
                         {IndexSet::of(2, {0, 1}), IndexSet::of(2, {1})});
}

FormalContext neq(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<IndexSet> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IndexSet row = IndexSet::full(n);
        row.reset(i);
        rows.push_back(std::move(row));
    }
    return FormalContext(names, names, std::move(rows));
}

} // namespace

TEST_CASE("running example has exactly two ordered concepts") {
    ConceptLatticeView v = enumerate_concepts(pair_context());
    REQUIRE(v.concept_count() == 2);
    CHECK(v.concept_at(0).extent == IndexSet::of(2, {0}));
    CHECK(v.concept_at(0).intent == IndexSet::full(2));
    CHECK(v.concept_at(1).extent == IndexSet::full(2));
    CHECK(v.concept_at(1).intent == IndexSet::of(2, {1}));
    CHECK(v.lattice().leq(0, 1));
}

TEST_CASE("inequality context of size two gives the Boolean square") {
    ConceptLatticeView v = enumerate_concepts(neq(2));
    REQUIRE(v.concept_count() == 4);
    CHECK(find_isomorphism(v.lattice(), FiniteLattice::boolean_cube(2)).has_value());
}

TEST_CASE("empty 1x1 incidence yields the two-element chain") {
    FormalContext k({"g"}, {"m"}, {IndexSet(1)});
    ConceptLatticeView v = enumerate_concepts(k);
    REQUIRE(v.concept_count() == 2);
    CHECK(v.concept_at(v.bottom()).extent.empty());
    CHECK(v.concept_at(v.top()).intent.empty());
}

TEST_CASE("enumeration count equals the brute-force count") {
    for (const auto& k : {pair_context(), neq(2), neq(3),
                          standard_context(n5()), standard_context(m3()),
                          load_cxt(WDLKIT_FIXTURE_DIR "/menagerie6x5.cxt"),
                          load_cxt(WDLKIT_FIXTURE_DIR "/chain3_sq.cxt")}) {
        CHECK(enumerate_concepts(k).concept_count() == brute_force_concept_count(k));
    }
}

TEST_CASE("every concept appears exactly once") {
    ConceptLatticeView v = enumerate_concepts(neq(3));
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& c : v.concepts()) seen.insert(c.extent.words());
    CHECK(seen.size() == v.concept_count());
}

TEST_CASE("meet and join formulas agree with the lattice tables") {
    ConceptLatticeView v = enumerate_concepts(neq(3));
    const FiniteLattice& lat = v.lattice();
    for (std::size_t i = 0; i < v.concept_count(); ++i)
        for (std::size_t j = 0; j < v.concept_count(); ++j) {
            FormalConcept m = v.meet_of({static_cast<int>(i), static_cast<int>(j)});
            FormalConcept jn = v.join_of({static_cast<int>(i), static_cast<int>(j)});
            CHECK(v.index_of_extent(m.extent) == lat.meet(static_cast<int>(i), static_cast<int>(j)));
            CHECK(v.index_of_extent(jn.extent) == lat.join(static_cast<int>(i), static_cast<int>(j)));
        }
    CHECK(v.index_of_extent(v.meet_of({}).extent) == v.top());
    CHECK(v.index_of_extent(v.join_of({}).extent) == v.bottom());
}

TEST_CASE("meet of atoms in the Boolean square is the bottom") {
    ConceptLatticeView v = enumerate_concepts(neq(2));
    std::vector<int> atoms;
    for (std::size_t i = 0; i < v.concept_count(); ++i)
        if (v.concept_at(static_cast<int>(i)).extent.count() == 1) atoms.push_back(static_cast<int>(i));
    REQUIRE(atoms.size() == 2);
    CHECK(v.index_of_extent(v.meet_of(atoms).extent) == v.bottom());
    CHECK(v.index_of_extent(v.join_of(atoms).extent) == v.top());
}

TEST_CASE("standard context of the two-chain is 1x1 and empty") {
    FormalContext k = standard_context(FiniteLattice::chain(2));
    CHECK(k.object_count() == 1);
    CHECK(k.attribute_count() == 1);
    CHECK_FALSE(k.incident(0, 0));
}

TEST_CASE("standard context of the pentagon reads off the order") {
    FiniteLattice l = n5();
    FormalContext k = standard_context(l);
    CHECK(k.objects() == std::vector<std::string>{"a", "b", "c"});
    CHECK(k.attributes() == std::vector<std::string>{"a", "b", "c"});
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t m = 0; m < 3; ++m)
            CHECK(k.incident(static_cast<int>(g), static_cast<int>(m)) ==
                  l.leq(l.index_of(k.objects()[g]), l.index_of(k.attributes()[m])));
}

TEST_CASE("standard context of the Boolean square pairs atoms with coatoms") {
    FormalContext k = standard_context(FiniteLattice::boolean_cube(2));
    REQUIRE(k.object_count() == 2);
    REQUIRE(k.attribute_count() == 2);
    // Each atom lies below exactly one coatom.
    for (std::size_t g = 0; g < 2; ++g) CHECK(k.row(static_cast<int>(g)).count() == 1);
}

TEST_CASE("round trip through the standard context recovers the lattice") {
    for (const FiniteLattice& l : {n5(), m3(), chain3(), FiniteLattice::boolean_cube(3)}) {
        ConceptLatticeView v = enumerate_concepts(standard_context(l));
        CHECK(find_isomorphism(v.lattice(), l).has_value());
    }
}

TEST_CASE("round trip holds for every lattice up to eight elements") {
    // Sizes up to six are covered again by the acceptance suite; seven and
    // eight are cheap enough to run in full here.
    for (std::size_t n : {7u, 8u})
        for (const FiniteLattice& l : wdlkit::enumerate_lattices(n)) {
            ConceptLatticeView v = enumerate_concepts(standard_context(l));
            CHECK(v.concept_count() == n);
            CHECK(find_isomorphism(v.lattice(), l).has_value());
        }
}

TEST_CASE("enumeration matches brute force on a twelve-object context") {
    // Deterministic pseudo-random incidence over 12 objects.
    std::vector<std::string> objs, attrs;
    for (int g = 0; g < 12; ++g) objs.push_back("g" + std::to_string(g));
    for (int m = 0; m < 6; ++m) attrs.push_back("m" + std::to_string(m));
    std::vector<IndexSet> rows;
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int g = 0; g < 12; ++g) {
        IndexSet row(6);
        for (int m = 0; m < 6; ++m) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            if ((state >> 33) % 3 != 0) row.set(static_cast<std::size_t>(m));
        }
        rows.push_back(std::move(row));
    }
    FormalContext k(objs, attrs, std::move(rows));
    CHECK(enumerate_concepts(k).concept_count() == brute_force_concept_count(k));
}

TEST_CASE("density of object and attribute concepts") {
    for (const auto& k : {pair_context(), neq(3), standard_context(n5())}) {
        ConceptLatticeView v = enumerate_concepts(k);
        IndexSet gamma(v.concept_count()), mu(v.concept_count());
        for (std::size_t g = 0; g < k.object_count(); ++g)
            gamma.set(static_cast<std::size_t>(v.object_concept_index(static_cast<int>(g))));
        for (std::size_t m = 0; m < k.attribute_count(); ++m)
            mu.set(static_cast<std::size_t>(v.attribute_concept_index(static_cast<int>(m))));
        CHECK(density_check(v, gamma, mu));

        // Join irreducibles of the concept lattice are supremum-dense too.
        IndexSet ji = v.lattice().join_irreducibles();
        IndexSet mi = v.lattice().meet_irreducibles();
        CHECK(density_check(v, ji, mi));
    }
}

TEST_CASE("a singleton above the bottom is not dense in a larger lattice") {
    ConceptLatticeView v = enumerate_concepts(neq(2));
    IndexSet top_only(v.concept_count());
    top_only.set(static_cast<std::size_t>(v.top()));
    IndexSet bottom_only(v.concept_count());
    bottom_only.set(static_cast<std::size_t>(v.bottom()));
    CHECK_FALSE(density_check(v, top_only, bottom_only));
}

TEST_CASE("reduce drops reducible objects and attributes") {
    // (L, L, <=) for the 3-chain reduces to (J, M, <=) = ({m,1}, {0,m}).
    FormalContext k = load_cxt(WDLKIT_FIXTURE_DIR "/chain3_sq.cxt");
    FormalContext r = reduce(k);
    CHECK(r.objects() == std::vector<std::string>{"m", "1"});
    CHECK(r.attributes() == std::vector<std::string>{"0", "m"});
    CHECK(find_isomorphism(enumerate_concepts(r).lattice(), enumerate_concepts(k).lattice()).has_value());
}

TEST_CASE("standard contexts are already reduced") {
    for (const FiniteLattice& l : {n5(), m3(), FiniteLattice::boolean_cube(2)}) {
        FormalContext k = standard_context(l);
        FormalContext r = reduce(k);
        CHECK(r.objects() == k.objects());
        CHECK(r.attributes() == k.attributes());
    }
}

TEST_CASE("reduce is idempotent and preserves the lattice") {
    FormalContext k = load_cxt(WDLKIT_FIXTURE_DIR "/menagerie6x5.cxt");
    FormalContext k1 = reduce(clarify(k).context);
    FormalContext k2 = reduce(k1);
    CHECK(k1.objects() == k2.objects());
    CHECK(k1.attributes() == k2.attributes());
    CHECK(find_isomorphism(enumerate_concepts(k1).lattice(), enumerate_concepts(k).lattice()).has_value());
}

TEST_CASE("DOT output has one node per concept and one edge per cover") {
    ConceptLatticeView v = enumerate_concepts(neq(3));
    std::string dot = to_dot(v);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t pos = dot.find("label="); pos != std::string::npos; pos = dot.find("label=", pos + 1)) ++nodes;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
    std::size_t covers = 0;
    for (std::size_t i = 0; i < v.concept_count(); ++i)
        covers += v.lattice().upper_covers(static_cast<int>(i)).size();
    CHECK(nodes == v.concept_count());
    CHECK(edges == covers);
}
