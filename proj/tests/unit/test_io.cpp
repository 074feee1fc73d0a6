#include <doctest.h>

#include "helpers.hpp"
#include "wdlkit/io.hpp"

using namespace wdlkit;
using namespace wdlkit::testing;

TEST_CASE("lat round trip with tables") {
    Dicomplementation d = load_lat(WDLKIT_FIXTURE_DIR "/l1.lat");
    Dicomplementation again = parse_lat(to_lat(d));
    CHECK(again.lattice.names() == d.lattice.names());
    CHECK(again.up == d.up);
    CHECK(again.down == d.down);
    for (std::size_t a = 0; a < d.lattice.size(); ++a)
        for (std::size_t b = 0; b < d.lattice.size(); ++b)
            CHECK(d.lattice.leq(static_cast<int>(a), static_cast<int>(b)) ==
                  again.lattice.leq(static_cast<int>(a), static_cast<int>(b)));
}

TEST_CASE("lat files without tables default to the trivial dicomplementation") {
    Dicomplementation d = parse_lat("elements 0 m 1\ncover 0 m\ncover m 1\n");
    Dicomplementation t = trivial_dicomplementation(d.lattice);
    CHECK(d.up == t.up);
    CHECK(d.down == t.down);
}

TEST_CASE("lat parse errors") {
    CHECK_THROWS_AS(parse_lat("elements a b\norder a b\n"), ParseError);       // unknown keyword
    CHECK_THROWS_AS(parse_lat("cover a b\n"), ParseError);                     // elements must come first
    CHECK_THROWS_AS(parse_lat("elements\n"), ParseError);                      // empty carrier
    CHECK_THROWS_AS(parse_lat("elements a b\ncover a\n"), ParseError);         // arity
    CHECK_THROWS_AS(parse_lat("elements a a\n"), ParseError);                  // duplicate name
    // Partial tables are errors, not defaults.
    CHECK_THROWS_AS(parse_lat("elements 0 1\ncover 0 1\nup 0 1\ndown 0 1\ndown 1 0\n"), ParseError);
    // One table alone is partial too.
    CHECK_THROWS_AS(parse_lat("elements 0 1\ncover 0 1\nup 0 1\nup 1 0\n"), ParseError);
    // Duplicate declarations too.
    CHECK_THROWS_AS(parse_lat("elements 0 1\ncover 0 1\nup 0 1\nup 0 0\nup 1 0\ndown 0 1\ndown 1 0\n"),
                    ParseError);
    // Comments and blank lines are fine.
    CHECK_NOTHROW(parse_lat("# chain\nelements 0 1 # names\n\ncover 0 1\n"));
}

TEST_CASE("cxt round trip is bit-exact") {
    std::string text = read_file(WDLKIT_FIXTURE_DIR "/pair2x2.cxt");
    FormalContext k = parse_cxt(text);
    CHECK(to_cxt(k) == text);
    CHECK(k.object_count() == 2);
    CHECK(k.incident(0, 0));
    CHECK_FALSE(k.incident(1, 0));
}

TEST_CASE("cxt tolerates CR and missing trailing newline") {
    FormalContext k = parse_cxt("B\r\n\r\n1\r\n1\r\n\r\ng\r\nm\r\nX");
    CHECK(k.object_count() == 1);
    CHECK(k.incident(0, 0));
}

TEST_CASE("cxt parse errors") {
    CHECK_THROWS_AS(parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"), ParseError);          // wrong magic
    CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nXX\n"), ParseError);         // row width
    CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nY\n"), ParseError);          // bad character
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\nm\nX\n"), ParseError);          // truncated
    CHECK_THROWS_AS(parse_cxt("B\nboom\n1\n1\n\ng\nm\nX\n"), ParseError);      // missing empty line
}

TEST_CASE("set system loader distinguishes closure and kernel files") {
    auto c = load_set_system(WDLKIT_FIXTURE_DIR "/closure4.sys");
    CHECK(std::holds_alternative<ClosureSystem>(c));
    auto k = load_set_system(WDLKIT_FIXTURE_DIR "/kernel4.sys");
    CHECK(std::holds_alternative<KernelSystem>(k));

    CHECK_THROWS_AS(parse_set_system("ground a\nclosed a\nopen\n"), ParseError);   // mixed
    CHECK_THROWS_AS(parse_set_system("closed a\n"), ParseError);                   // ground first
    CHECK_THROWS_AS(parse_set_system("ground a\n"), ParseError);                   // no sets
    CHECK_THROWS_AS(parse_set_system("ground a\nclosed b\n"), ParseError);         // unknown element
}

TEST_CASE("report serialization matches the documented shape") {
    auto d = double_p_tables(n5());
    REQUIRE(d.has_value());
    AxiomReport r = check_axioms(*d);
    std::string text = to_text(r);
    CHECK(text.find("PASS axiom-1\n") != std::string::npos);
    CHECK(text.find("FAIL axiom-3 witness x=b y=a lhs=a rhs=b\n") != std::string::npos);
}
