#include <doctest.h>

#include "helpers.hpp"
#include "wdlkit/context.hpp"

using namespace wdlkit;

namespace {

/// The running 2x2 example: g1 has m1,m2; g2 has m2.
FormalContext pair_context() {
    return FormalContext({"g1", "g2"}, {"m1", "m2"},
                         {IndexSet::of(2, {0, 1}), IndexSet::of(2, {1})});
}

} // namespace

TEST_CASE("derivations on the running example") {
    FormalContext k = pair_context();

    CHECK(k.intent_of(IndexSet(2)) == IndexSet::full(2));          // ∅' = M
    CHECK(k.intent_of(IndexSet::of(2, {0})) == IndexSet::full(2)); // g1' = {m1,m2}
    CHECK(k.intent_of(IndexSet::full(2)) == IndexSet::of(2, {1})); // {g1,g2}' = {m2}

    CHECK(k.extent_of(IndexSet(2)) == IndexSet::full(2));
    CHECK(k.extent_of(IndexSet::of(2, {1})) == IndexSet::full(2));
    CHECK(k.extent_of(IndexSet::full(2)) == IndexSet::of(2, {0}));
}

TEST_CASE("derivation rejects foreign universes") {
    FormalContext k = pair_context();
    CHECK_THROWS_AS(k.intent_of(IndexSet(3)), OutOfRange);
    CHECK_THROWS_AS(k.object_index("nope"), OutOfRange);
}

TEST_CASE("object and attribute concepts") {
    FormalContext k = pair_context();
    auto [ge, gi] = k.object_concept(k.object_index("g2"));
    CHECK(ge == IndexSet::full(2));          // g2'' = {g1,g2}
    CHECK(gi == IndexSet::of(2, {1}));       // g2' = {m2}
    auto [me, mi] = k.attribute_concept(k.attribute_index("m1"));
    CHECK(me == IndexSet::of(2, {0}));       // m1' = {g1}
    CHECK(mi == IndexSet::full(2));          // m1'' = {m1,m2}

    FormalContext eq({"a"}, {"a"}, {IndexSet::of(1, {0})});
    auto [ee, ei] = eq.object_concept(0);
    CHECK(ee == IndexSet::of(1, {0}));
    CHECK(ei == IndexSet::of(1, {0}));
}

TEST_CASE("Galois connection laws on all subsets of small contexts") {
    FormalContext contexts[] = {
        pair_context(),
        FormalContext({"a", "b", "c"}, {"x", "y"},
                      {IndexSet::of(2, {0}), IndexSet::of(2, {0, 1}), IndexSet(2)}),
    };
    for (const FormalContext& k : contexts) {
        std::size_t g = k.object_count();
        for (std::size_t m1 = 0; m1 < (std::size_t{1} << g); ++m1)
            for (std::size_t m2 = 0; m2 < (std::size_t{1} << g); ++m2) {
                IndexSet a1(g), a2(g);
                for (std::size_t i = 0; i < g; ++i) {
                    if (m1 & (std::size_t{1} << i)) a1.set(i);
                    if (m2 & (std::size_t{1} << i)) a2.set(i);
                }
                CHECK(k.extent_closure(a1).contains(a1));                       // A ⊆ A''
                CHECK(k.intent_of(a1) == k.intent_of(k.extent_closure(a1)));    // A' = A'''
                if (a2.contains(a1))                                            // A1 ⊆ A2 ⟹ A2' ⊆ A1'
                    CHECK(k.intent_of(a1).contains(k.intent_of(a2)));
            }
        // Attribute side, by the same sweep.
        std::size_t m = k.attribute_count();
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            IndexSet b(m);
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) b.set(i);
            CHECK(k.intent_closure(b).contains(b));                             // B ⊆ B''
            CHECK(k.extent_of(b) == k.extent_of(k.intent_closure(b)));
        }
    }
}

TEST_CASE("clarify merges duplicate rows keeping the least name") {
    FormalContext k({"g2", "g1"}, {"m"}, {IndexSet::of(1, {0}), IndexSet::of(1, {0})});
    ClarifiedContext c = clarify(k);
    CHECK(c.context.object_count() == 1);
    CHECK(c.context.objects() == std::vector<std::string>{"g1"});
    REQUIRE(c.merged_objects.size() == 1);
    CHECK(c.merged_objects[0].first == "g1");
    CHECK(c.merged_objects[0].second == std::vector<std::string>{"g2"});
}

TEST_CASE("clarify by row comparison and idempotence") {
    FormalContext k({"g1", "g2", "g3"}, {"m1", "m2"},
                    {IndexSet::of(2, {0}), IndexSet::of(2, {0}), IndexSet::of(2, {1})});
    ClarifiedContext c = clarify(k);
    CHECK(c.context.objects() == std::vector<std::string>{"g1", "g3"});
    CHECK(c.context.is_clarified());

    ClarifiedContext again = clarify(c.context);
    CHECK(again.context.objects() == c.context.objects());
    CHECK(again.merged_objects.empty());
    CHECK(again.merged_attributes.empty());

    ClarifiedContext p = clarify(pair_context());
    CHECK(p.context.object_count() == 2);
    CHECK(p.context.attribute_count() == 2);
}
