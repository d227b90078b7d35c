// Buchberger's algorithm: canonical reduced bases, normal forms, membership.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

namespace {
template <class K>
std::vector<Polynomial<K>> gb_of(const RingPtr& R, const MonomialOrder& ord,
                                 const std::vector<std::string>& gens) {
    std::vector<Polynomial<K>> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial<K>(R, ord, s));
    return buchberger<K>(R, ord, ps).elements();
}
}  // namespace

TEST_CASE("classic bases") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder grevlex = MonomialOrder::grevlex();

    // Twisted cubic as a determinantal ideal: already a grevlex basis.
    auto g = gb_of<QQ>(R, grevlex, {"x*z - y^2", "y*z - x^2"});
    // The S-pair contributes a third element.
    CHECK(g.size() == 3);

    // A principal ideal is its own basis, made monic.
    auto h = gb_of<QQ>(R, grevlex, {"2*x^2 - 2*y^2"});
    REQUIRE(h.size() == 1);
    CHECK(poly_to_string(h[0]) == "x^2 - y^2");
}

TEST_CASE("reduced basis is canonical under permutation and scaling") {
    RingPtr R = make_ring({"x", "y", "z", "t"});
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::string> gens = {"y^2*z - x^2*t", "z^4 - x*t^3", "x^2*z^3 - x*y^2*t^2"};

    auto g1 = gb_of<QQ>(R, ord, {gens[0], gens[1], gens[2]});
    auto g2 = gb_of<QQ>(R, ord, {gens[2], gens[0], gens[1]});
    REQUIRE(g1.size() == g2.size());
    for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g1[i] == g2[i]);

    std::vector<Polynomial<QQ>> scaled;
    for (std::size_t i = 0; i < gens.size(); ++i)
        scaled.push_back(
            parse_polynomial<QQ>(R, ord, gens[i]).scaled(QQ(static_cast<int>(3 + 2 * i), 7)));
    auto g3 = buchberger<QQ>(R, ord, scaled).elements();
    REQUIRE(g3.size() == g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g3[i] == g1[i]);

    // Same over a prime field.
    RingPtr Rp = make_ring({"x", "y", "z", "t"}, 7);
    auto p1 = gb_of<Zp>(Rp, ord, {gens[0], gens[1], gens[2]});
    auto p2 = gb_of<Zp>(Rp, ord, {gens[2], gens[1], gens[0]});
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i] == p2[i]);
}

TEST_CASE("buchberger is idempotent on its own output") {
    RingPtr R = make_ring({"x", "y", "z", "t"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto g = gb_of<QQ>(R, ord, {"y^2*z - x^2*t", "z^4 - x*t^3"});
    auto g2 = buchberger<QQ>(R, ord, g).elements();
    REQUIRE(g2.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g2[i] == g[i]);
}

TEST_CASE("normal forms and membership") {
    auto E = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };

    // A generator reduces to zero; its square does too.
    CHECK(E.J.contains(P("x^2*z^3 - x*y^2*t^2")));
    auto w = P("x^4*z^2 - x*y^4*t");
    CHECK(!E.J.contains(w));
    CHECK(E.J.contains(w * w));
    CHECK(E.Kid.contains(w));

    // Normal form is the identity on irreducible elements.
    auto gb = E.J.gb();
    auto r = gb.reduce(P("x"));
    CHECK(r == P("x"));
    CHECK(gb.reduce(P("y^2*z - x^2*t")).is_zero());

    // Leading monomials of the basis elements generate the initial ideal used
    // by the Hilbert routines.
    auto lms = gb.leading_monomials();
    REQUIRE(lms.size() == gb.elements().size());
    for (std::size_t i = 0; i < lms.size(); ++i)
        CHECK(lms[i] == gb.elements()[i].leading_term().m);
}

TEST_CASE("contains_one detects the unit ideal") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis<QQ> gb = buchberger<QQ>(
        R, ord, {parse_polynomial<QQ>(R, ord, "x"), parse_polynomial<QQ>(R, ord, "x + 1")});
    CHECK(gb.contains_one());
    GroebnerBasis<QQ> gb2 =
        buchberger<QQ>(R, ord, {parse_polynomial<QQ>(R, ord, "x^2 + y^2")});
    CHECK(!gb2.contains_one());
}

TEST_CASE("lex basis eliminates variables") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder lex = MonomialOrder::lex();
    // x = y^2, y = z^2 parametrizes; lex basis exposes the relation in (y, z).
    auto g = gb_of<QQ>(R, lex, {"x - y^2", "y - z^2"});
    bool found = false;
    for (const auto& f : g) {
        bool uses_x = false;
        // A polynomial avoiding x witnesses elimination.
        for (const auto& t : f.terms())
            if (t.m[0] > 0) uses_x = true;
        if (!uses_x && !f.is_zero()) found = true;
    }
    CHECK(found);
}
