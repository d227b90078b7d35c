// Ideal-file and complex-file readers/writers: round trips and diagnostics.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

static const char* kIdealFile =
    "# a comment\n"
    "field: Q\n"
    "vars: x y z t\n"
    "order: grevlex\n"
    "\n"
    "I = y^2*z - x^2*t, z^4 - x*t^3\n"
    "J = y^2*z - x^2*t, z^4 - x*t^3, x^2*z^3 - x*y^2*t^2\n";

TEST_CASE("ideal file reader") {
    IdealFileText t = read_ideal_file_text(kIdealFile);
    CHECK(t.characteristic == 0);
    CHECK(t.vars == std::vector<std::string>{"x", "y", "z", "t"});
    CHECK(t.order_name == "grevlex");
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].name == "I");
    CHECK(t.entries[0].polys.size() == 2);
    REQUIRE(t.find("J") != nullptr);
    CHECK(t.find("J")->polys.size() == 3);
    CHECK(t.find("nope") == nullptr);
}

TEST_CASE("ideal file write/read round trip") {
    IdealFileText t = read_ideal_file_text(kIdealFile);
    std::string out = write_ideal_file_text(t);
    IdealFileText t2 = read_ideal_file_text(out);
    CHECK(t2.characteristic == t.characteristic);
    CHECK(t2.vars == t.vars);
    CHECK(t2.order_name == t.order_name);
    REQUIRE(t2.entries.size() == t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        CHECK(t2.entries[i].name == t.entries[i].name);
        CHECK(t2.entries[i].polys == t.entries[i].polys);
    }
    // A second write is byte-identical.
    CHECK(write_ideal_file_text(t2) == out);
}

TEST_CASE("ideal file over a prime field") {
    IdealFileText t = read_ideal_file_text("field: Fp 101\nvars: x y\nA = x^2 + 100*y^2\n");
    CHECK(t.characteristic == 101);
    RingPtr R = make_ring(t.vars, t.characteristic);
    auto f = parse_polynomial<Zp>(R, MonomialOrder::grevlex(), t.entries[0].polys[0]);
    CHECK(poly_to_string(f) == "x^2 + 100*y^2");
}

TEST_CASE("ideal file diagnostics carry line numbers") {
    try {
        read_ideal_file_text("field: Q\nvars: x y\nA = x^2 +\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(read_ideal_file_text("vars: x y\nA = x\n"), ParseError);   // no field
    CHECK_THROWS_AS(read_ideal_file_text("field: Q\nA = x\n"), ParseError);    // no vars
    CHECK_THROWS_AS(read_ideal_file_text("field: Q\nvars: x\norder: fancy\nA = x\n"),
                    ParseError);                                               // unknown order
}

TEST_CASE("complex file round trip preserves the complex") {
    RingPtr R = make_ring({"x", "y", "z", "t"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto E = example21<QQ>();
    std::vector<std::string> vars = {"x", "y", "z", "t"};
    std::string text = write_complex_file_text(E.j_complex, vars);

    ComplexFileText data = read_complex_file_text(text);
    CHECK(data.characteristic == 0);
    CHECK(data.vars == vars);
    REQUIRE(data.twists.size() == E.j_complex.twists.size());
    CHECK(data.twists == E.j_complex.twists);

    GradedComplex<QQ> C = complex_from_text<QQ>(data, R, ord);
    REQUIRE(C.maps.size() == E.j_complex.maps.size());
    for (std::size_t k = 0; k < C.maps.size(); ++k) {
        REQUIRE(C.maps[k].nrows == E.j_complex.maps[k].nrows);
        REQUIRE(C.maps[k].ncols == E.j_complex.maps[k].ncols);
        for (int r = 0; r < C.maps[k].nrows; ++r)
            for (int c = 0; c < C.maps[k].ncols; ++c)
                CHECK(C.maps[k].e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                      E.j_complex.maps[k].e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    // Write of the reparse is byte-identical.
    CHECK(write_complex_file_text(C, vars) == text);
}

TEST_CASE("complex file diagnostics") {
    // Row count mismatch against the twist blocks.
    std::string bad1 =
        "field: Q\nvars: x y\norder: grevlex\ntwists: 0 | 1 1\n"
        "matrix: 1\nrow: x, y\nrow: y, x\n";
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    CHECK_THROWS_AS(complex_from_text<QQ>(read_complex_file_text(bad1), R, ord), ParseError);

    // Entry count mismatch within a row.
    std::string bad2 =
        "field: Q\nvars: x y\norder: grevlex\ntwists: 0 | 1 1\n"
        "matrix: 1\nrow: x\n";
    CHECK_THROWS_AS(complex_from_text<QQ>(read_complex_file_text(bad2), R, ord), ParseError);

    // Maps that are not graded with respect to the declared twists.
    std::string bad3 =
        "field: Q\nvars: x y\norder: grevlex\ntwists: 0 | 1 2\n"
        "matrix: 1\nrow: x, y\n";
    CHECK_THROWS(complex_from_text<QQ>(read_complex_file_text(bad3), R, ord));

    // Malformed header.
    CHECK_THROWS_AS(read_complex_file_text("vars: x\ntwists: 0\n"), ParseError);
}
