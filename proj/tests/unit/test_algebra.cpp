#include <doctest.h>

#include "helpers.hpp"
#include "wdlkit/concept_algebra.hpp"
#include "wdlkit/io.hpp"

using namespace wdlkit;
using namespace wdlkit::testing;

namespace {

FormalContext neq2() {
    return FormalContext({"a", "b"}, {"a", "b"}, {IndexSet::of(2, {1}), IndexSet::of(2, {0})});
}

} // namespace

TEST_CASE("weak negation swaps the singletons of the inequality context") {
    FormalContext k = neq2();
    ConceptLatticeView v = enumerate_concepts(k);
    // ({a},{b})^up = ({b},{a}).
    int ca = v.index_of_extent(IndexSet::of(2, {0}));
    REQUIRE(ca >= 0);
    FormalConcept negated = weak_negation(k, v.concept_at(ca));
    CHECK(negated.extent == IndexSet::of(2, {1}));
    CHECK(negated.intent == IndexSet::of(2, {0}));
    FormalConcept opposed = weak_opposition(k, v.concept_at(ca));
    CHECK(opposed.extent == IndexSet::of(2, {1}));
}

TEST_CASE("negation of the least concept reaches the top when G is closed") {
    FormalContext k = neq2();
    ConceptLatticeView v = enumerate_concepts(k);
    ConceptAlgebraView a(v);
    CHECK(a.weak_negation_of(v.bottom()) == v.top());
    CHECK(a.weak_opposition_of(v.top()) == v.bottom());
}

TEST_CASE("concept algebras pass the axioms eagerly") {
    for (const char* f : {"/pair2x2.cxt", "/neq2.cxt", "/neq3.cxt", "/empty1x1.cxt",
                          "/eq1x1.cxt", "/n5_std.cxt", "/chain3_sq.cxt", "/menagerie6x5.cxt"}) {
        ConceptAlgebraView a = build_concept_algebra(load_cxt(std::string(WDLKIT_FIXTURE_DIR) + f));
        CHECK(a.report().all_passed());
    }
}

TEST_CASE("1x1 empty context gives the two-chain with the trivial dicomplementation") {
    ConceptAlgebraView a = build_concept_algebra(load_cxt(WDLKIT_FIXTURE_DIR "/empty1x1.cxt"));
    REQUIRE(a.base().concept_count() == 2);
    Dicomplementation d = a.as_dicomplementation();
    Dicomplementation t = trivial_dicomplementation(d.lattice);
    CHECK(d.up == t.up);
    CHECK(d.down == t.down);
}

TEST_CASE("negation extends the extent complement, opposition the intent complement") {
    for (const char* f : {"/pair2x2.cxt", "/neq3.cxt", "/menagerie6x5.cxt"}) {
        FormalContext k = load_cxt(std::string(WDLKIT_FIXTURE_DIR) + f);
        ConceptAlgebraView a = build_concept_algebra(k);
        for (std::size_t i = 0; i < a.base().concept_count(); ++i) {
            const FormalConcept& c = a.base().concept_at(static_cast<int>(i));
            const FormalConcept& up = a.base().concept_at(a.weak_negation_of(static_cast<int>(i)));
            CHECK(up.extent.contains(c.extent.complement()));
            const FormalConcept& down = a.base().concept_at(a.weak_opposition_of(static_cast<int>(i)));
            CHECK(down.intent.contains(c.intent.complement()));
            // Double application: c^upup <= c <= c^downdown.
            int upup = a.weak_negation_of(a.weak_negation_of(static_cast<int>(i)));
            int downdown = a.weak_opposition_of(a.weak_opposition_of(static_cast<int>(i)));
            CHECK(a.base().lattice().leq(upup, static_cast<int>(i)));
            CHECK(a.base().lattice().leq(static_cast<int>(i), downdown));
        }
    }
}

TEST_CASE("on standard contexts of Boolean lattices both operations are complementation") {
    for (std::size_t n : {2u, 3u}) {
        FormalContext k = standard_context(FiniteLattice::boolean_cube(n));
        ConceptAlgebraView a = build_concept_algebra(k);
        CHECK(a.up_table() == a.down_table());
        const FiniteLattice& lat = a.base().lattice();
        for (std::size_t i = 0; i < a.base().concept_count(); ++i) {
            CHECK(lat.meet(static_cast<int>(i), a.weak_negation_of(static_cast<int>(i))) == lat.bottom());
            CHECK(lat.join(static_cast<int>(i), a.weak_negation_of(static_cast<int>(i))) == lat.top());
        }
    }
}

TEST_CASE("the L1 fixture is the concept algebra of its generator context") {
    // The fixture's tables come from the generator sets G = J(L) ∪ {v,w} and
    // H = M(L) ∪ {w,v}; the concept algebra of (G, H, <=) must reproduce them
    // element for element.
    Dicomplementation d = load_lat(WDLKIT_FIXTURE_DIR "/l1.lat");
    const FiniteLattice& l = d.lattice;
    IndexSet g = l.join_irreducibles();
    g.set(static_cast<std::size_t>(l.index_of("v")));
    g.set(static_cast<std::size_t>(l.index_of("w")));
    IndexSet h = l.meet_irreducibles();
    h.set(static_cast<std::size_t>(l.index_of("v")));
    h.set(static_cast<std::size_t>(l.index_of("w")));

    std::vector<std::string> onames, anames;
    std::vector<int> objs = g.elements(), attrs = h.elements();
    for (int x : objs) onames.push_back(l.name(x));
    for (int y : attrs) anames.push_back(l.name(y));
    std::vector<IndexSet> rows;
    for (int x : objs) {
        IndexSet row(attrs.size());
        for (std::size_t j = 0; j < attrs.size(); ++j)
            if (l.leq(x, attrs[j])) row.set(j);
        rows.push_back(std::move(row));
    }
    ConceptAlgebraView a = build_concept_algebra(FormalContext(onames, anames, std::move(rows)));

    auto iso = find_isomorphism(l, a.base().lattice());
    REQUIRE(iso.has_value());
    for (std::size_t x = 0; x < l.size(); ++x) {
        CHECK((*iso)[static_cast<std::size_t>(d.up[x])] == a.weak_negation_of((*iso)[x]));
        CHECK((*iso)[static_cast<std::size_t>(d.down[x])] == a.weak_opposition_of((*iso)[x]));
    }
}

TEST_CASE("table dump format") {
    ConceptAlgebraView a = build_concept_algebra(load_cxt(WDLKIT_FIXTURE_DIR "/pair2x2.cxt"));
    std::string dump = a.table_dump();
    CHECK(dump.find("0: up=") != std::string::npos);
    CHECK(dump.find("extent={g1} intent={m1,m2}") != std::string::npos);
}
