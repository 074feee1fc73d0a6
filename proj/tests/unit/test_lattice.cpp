#include <doctest.h>

#include "helpers.hpp"
#include "wdlkit/lattice.hpp"

using namespace wdlkit;
using namespace wdlkit::testing;

TEST_CASE("two-chain from covers") {
    FiniteLattice l = FiniteLattice::from_covers({"0", "1"}, {{"0", "1"}});
    CHECK(l.size() == 2);
    CHECK(l.bottom() == l.index_of("0"));
    CHECK(l.top() == l.index_of("1"));
    CHECK(l.meet(0, 1) == l.bottom());
    CHECK(l.join(0, 1) == l.top());
}

TEST_CASE("pentagon has meets and joins everywhere") {
    FiniteLattice l = n5();
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b) {
            CHECK(l.meet(static_cast<int>(a), static_cast<int>(b)) == naive_meet(l, static_cast<int>(a), static_cast<int>(b)));
            CHECK(l.join(static_cast<int>(a), static_cast<int>(b)) == naive_join(l, static_cast<int>(a), static_cast<int>(b)));
        }
    // a ∨ c = 1 and b ∧ c = 0 pin the pentagon shape.
    CHECK(l.join(l.index_of("a"), l.index_of("c")) == l.top());
    CHECK(l.meet(l.index_of("b"), l.index_of("c")) == l.bottom());
}

TEST_CASE("two maximal elements are rejected with the witness pair") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}}), NotALattice);
    try {
        FiniteLattice::from_covers({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
    } catch (const NotALattice& e) {
        CHECK(e.x == "x");
        CHECK(e.y == "y");
        CHECK(e.reason == "no common upper bound");
    }
}

TEST_CASE("cycles and empty carriers are rejected") {
    CHECK_THROWS_AS(FiniteLattice::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleDetected);
    CHECK_THROWS_AS(FiniteLattice::from_covers({}, {}), NotBounded);
    CHECK_THROWS_AS(FiniteLattice::from_covers({"a", "b"}, {{"a", "z"}}), OutOfRange);
}

TEST_CASE("irreducibles") {
    FiniteLattice two = FiniteLattice::chain(2);
    CHECK(name_set(two, two.join_irreducibles()) == std::set<std::string>{"1"});
    CHECK(name_set(two, two.meet_irreducibles()) == std::set<std::string>{"0"});

    FiniteLattice l = n5();
    CHECK(name_set(l, l.join_irreducibles()) == std::set<std::string>{"a", "b", "c"});
    CHECK(name_set(l, l.meet_irreducibles()) == std::set<std::string>{"a", "b", "c"});

    FiniteLattice b2 = FiniteLattice::boolean_cube(2);
    CHECK(name_set(b2, b2.join_irreducibles()) == std::set<std::string>{"p", "q"});
    CHECK(name_set(b2, b2.meet_irreducibles()) == std::set<std::string>{"p", "q"});
}

TEST_CASE("join irreducibility agrees with the join-of-strictly-below test") {
    for (const FiniteLattice& l : {n5(), m3(), chain3(), FiniteLattice::boolean_cube(3)}) {
        IndexSet ji = l.join_irreducibles();
        for (std::size_t x = 0; x < l.size(); ++x) {
            IndexSet strictly_below = l.down_set(static_cast<int>(x));
            strictly_below.reset(x);
            bool not_join_of_below = l.join_of(strictly_below) != static_cast<int>(x);
            CHECK(ji.test(x) == not_join_of_below);
        }
    }
}

TEST_CASE("pseudocomplements on the pentagon and the diamond") {
    FiniteLattice l = n5();
    CHECK(l.pseudocomplement(l.index_of("0")) == l.top());
    CHECK(l.pseudocomplement(l.index_of("c")) == l.index_of("b"));
    CHECK(l.dual_pseudocomplement(l.index_of("1")) == l.bottom());
    CHECK(l.dual_pseudocomplement(l.index_of("a")) == l.index_of("c"));

    FiniteLattice d = m3();
    CHECK_FALSE(l.pseudocomplement(l.index_of("c")) == std::nullopt);
    CHECK(d.pseudocomplement(d.index_of("p")) == std::nullopt);
    CHECK(d.dual_pseudocomplement(d.index_of("p")) == std::nullopt);
}

TEST_CASE("pseudocomplements exist on every small distributive lattice") {
    // Checked again over the full enumeration in the acceptance suite; here a
    // couple of hand specimens.
    for (const FiniteLattice& l : {FiniteLattice::chain(4), FiniteLattice::boolean_cube(3)}) {
        REQUIRE(l.is_distributive());
        for (std::size_t x = 0; x < l.size(); ++x) {
            CHECK(l.pseudocomplement(static_cast<int>(x)).has_value());
            CHECK(l.dual_pseudocomplement(static_cast<int>(x)).has_value());
        }
    }
}

TEST_CASE("distributivity witness") {
    CHECK(FiniteLattice::chain(2).is_distributive());
    CHECK(FiniteLattice::boolean_cube(3).is_distributive());
    auto w = n5().distributivity_witness();
    REQUIRE(w.has_value());
    FiniteLattice l = n5();
    CHECK(l.meet(w->x, l.join(w->y, w->z)) != l.join(l.meet(w->x, w->y), l.meet(w->x, w->z)));
    CHECK(m3().distributivity_witness().has_value());
}

TEST_CASE("complemented elements") {
    FiniteLattice c3 = chain3();
    CHECK(name_set(c3, c3.complemented_elements()) == std::set<std::string>{"0", "1"});
    FiniteLattice l = n5();
    CHECK(l.complemented_elements().count() == 5);
}

TEST_CASE("meet and join tables define greatest/least bounds") {
    for (const FiniteLattice& l : {n5(), m3(), FiniteLattice::boolean_cube(2)}) {
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = 0; b < l.size(); ++b) {
                int m = l.meet(static_cast<int>(a), static_cast<int>(b));
                CHECK(l.leq(m, static_cast<int>(a)));
                CHECK(l.leq(m, static_cast<int>(b)));
                for (std::size_t z = 0; z < l.size(); ++z)
                    if (l.leq(static_cast<int>(z), static_cast<int>(a)) && l.leq(static_cast<int>(z), static_cast<int>(b)))
                        CHECK(l.leq(static_cast<int>(z), m));
            }
    }
}

TEST_CASE("isomorphism finds identity and rejects different shapes") {
    FiniteLattice l = n5();
    auto id = find_isomorphism(l, l);
    REQUIRE(id.has_value());
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b)
            CHECK(l.leq(static_cast<int>(a), static_cast<int>(b)) ==
                  l.leq((*id)[a], (*id)[b]));

    CHECK_FALSE(find_isomorphism(FiniteLattice::boolean_cube(2), l).has_value());
    CHECK_FALSE(find_isomorphism(n5(), m3()).has_value());
}

TEST_CASE("isomorphism is symmetric and respects the tables") {
    FiniteLattice a = FiniteLattice::boolean_cube(2);
    FiniteLattice b = FiniteLattice::from_covers({"bot", "l", "r", "top"},
                                                 {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
    auto fwd = find_isomorphism(a, b);
    auto bwd = find_isomorphism(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            CHECK((*fwd)[static_cast<std::size_t>(a.meet(static_cast<int>(x), static_cast<int>(y)))] ==
                  b.meet((*fwd)[x], (*fwd)[y]));
            CHECK((*fwd)[static_cast<std::size_t>(a.join(static_cast<int>(x), static_cast<int>(y)))] ==
                  b.join((*fwd)[x], (*fwd)[y]));
        }
}

TEST_CASE("sublattice extraction") {
    FiniteLattice l = n5();
    IndexSet members = IndexSet::of(l.size(), {l.bottom(), l.index_of("a"), l.index_of("c"), l.top()});
    auto [sub, to_old] = l.sublattice(members);
    CHECK(sub.size() == 4);
    CHECK(find_isomorphism(sub, FiniteLattice::boolean_cube(2)).has_value());

    IndexSet not_closed = IndexSet::of(l.size(), {l.index_of("a"), l.index_of("c")});
    CHECK_THROWS(l.sublattice(not_closed));
}
