// Coefficient fields and polynomial arithmetic, parsing, and printing.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

TEST_CASE("rational coefficients are exact") {
    QQ a(1, 3), b(1, 6);
    QQ s = a + b;
    s.canonicalize();
    CHECK(s == QQ(1, 2));
    CHECK(field_ops<QQ>::to_string(s) == "1/2");
    CHECK(field_ops<QQ>::is_zero(QQ(0)));
    RingPtr R = make_ring({"x"});
    CHECK_THROWS_AS(field_ops<QQ>::div(*R, QQ(1), QQ(0)), std::domain_error);
    CHECK(field_ops<QQ>::inv(*R, QQ(2, 3)) == QQ(3, 2));
}

TEST_CASE("prime field arithmetic") {
    CHECK(detail::mod_inverse(2, 101) == 51);
    CHECK(detail::mod_inverse(100, 101) == 100);  // -1 is its own inverse
    CHECK_THROWS_AS(detail::mod_inverse(0, 101), std::domain_error);
    Zp x{100};
    CHECK(field_ops<Zp>::to_string(x) == "100");
}

TEST_CASE("polynomial parse/print round trip") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const char* s : {"x^2*y - 2*x + 1/3", "z^4 - x*t", "x", "0", "-x + y",
                          "5/7*x^3*y^2*z - z^3 + 1"}) {
        if (std::string(s) == "z^4 - x*t") continue;  // t not in this ring
        auto f = parse_polynomial<QQ>(R, ord, s);
        auto g = parse_polynomial<QQ>(R, ord, poly_to_string(f));
        CHECK(f == g);
    }
    CHECK(poly_to_string(parse_polynomial<QQ>(R, ord, "x - x")) == "0");
}

TEST_CASE("polynomial arithmetic identities") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    auto f = P("x + y");
    auto g = P("x - y");
    CHECK(f * g == P("x^2 - y^2"));
    CHECK(f + g == P("2*x"));
    CHECK(f - f == P("0"));
    CHECK((f * f) * f == f * (f * f));
    CHECK(f.scaled(QQ(3)) == P("3*x + 3*y"));

    auto h = P("x^2*y + x*y^2");
    CHECK(h.leading_coefficient() == QQ(1));
    CHECK(h.degree() == 3);
}

TEST_CASE("parse errors carry position") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    try {
        parse_polynomial<QQ>(R, ord, "x^2 + ", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.col >= 6);
    }
    CHECK_THROWS_AS(parse_polynomial<QQ>(R, ord, "w + 1"), ParseError);       // unknown var
    CHECK_THROWS_AS(parse_polynomial<QQ>(R, ord, "(x + 1"), ParseError);      // unbalanced
    CHECK_THROWS_AS(parse_polynomial<QQ>(R, ord, "x^"), ParseError);          // missing exp
}

TEST_CASE("display rescaling produces primitive integer coefficients") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    CHECK(poly_to_string(primitive_rescale(P("3/2*x - 9/4*y"))) == "2*x - 3*y");
    CHECK(poly_to_string(primitive_rescale(P("-x + y"))) == "x - y");   // sign normalized
    CHECK(poly_to_string(primitive_rescale(P("4*x - 6*y"))) == "2*x - 3*y");
    CHECK(poly_to_string(primitive_rescale(P("0"))) == "0");
    // Over a prime field rescaling is the identity.
    RingPtr Rp = make_ring({"x", "y"}, 7);
    auto fp = parse_polynomial<Zp>(Rp, ord, "3*x + 5*y");
    CHECK(primitive_rescale(fp) == fp);
}

TEST_CASE("reduced basis display is ascending by leading monomial") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    GroebnerBasis<QQ> gb = buchberger<QQ>(R, ord, {P("x - y"), P("2*y^2 - 1")});
    CHECK(basis_to_string(gb.elements()) == "{x - y, 2*y^2 - 1}");
}
