// Ideal-level operations: colon, saturation, intersection, elimination,
// homogenization, radical membership, truncation, curve ideals.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

namespace {
template <class K>
bool ideals_equal(const Ideal<K>& a, const Ideal<K>& b) {
    return a.contains_ideal(b) && b.contains_ideal(a);
}
}  // namespace

TEST_CASE("colon chain of the base example") {
    auto E = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };
    Ideal<QQ> L(E.ring, E.ord, {P("z"), P("t")});

    CHECK(ideals_equal(quotient(E.I, L), E.J));
    // Colon by the square in one step or two steps agrees.
    Ideal<QQ> L2(E.ring, E.ord, {P("z^2"), P("z*t"), P("t^2")});
    CHECK(ideals_equal(quotient(E.I, L2), E.Kid));
    CHECK(ideals_equal(quotient(quotient(E.I, L), L), E.Kid));
    // The chain stabilizes: saturation equals the second colon.
    CHECK(ideals_equal(saturate(E.I, L), E.Kid));
    // J sits strictly between.
    CHECK(E.J.contains_ideal(E.I));
    CHECK(E.Kid.contains_ideal(E.J));
    CHECK(!E.I.contains_ideal(E.J));
    CHECK(!E.J.contains_ideal(E.Kid));
}

TEST_CASE("intersection with a principal ideal") {
    // For a prime not containing z, (z) ∩ p = z p.
    auto E = example22<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };
    Ideal<QQ> z_ideal(E.ring, E.ord, {P("z")});
    Ideal<QQ> lhs = intersect(z_ideal, E.b);
    Ideal<QQ> rhs = multiply(P("z"), E.b);
    CHECK(ideals_equal(lhs, rhs));
    CHECK(is_nonzerodivisor(P("z"), E.b));
}

TEST_CASE("intersection of monomial ideals") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> a(R, ord, {P("x^2"), P("y")});
    Ideal<QQ> b(R, ord, {P("x"), P("y^3")});
    Ideal<QQ> expect(R, ord, {P("x^2"), P("x*y"), P("y^3")});
    CHECK(ideals_equal(intersect(a, b), expect));
    CHECK(ideals_equal(ideal_sum(a, b), Ideal<QQ>(R, ord, {P("x"), P("y")})));
}

TEST_CASE("elimination and homogenization recover the twisted cubic") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> affine(R, ord, {P("y - x^2"), P("z - x^3")});

    // Eliminating x leaves the affine plane curve relation.
    Ideal<QQ> el = eliminate(affine, {"x"});
    RingPtr R2 = el.ctx();
    auto Q2 = [&](const char* s) { return parse_polynomial<QQ>(R2, el.order(), s); };
    CHECK(el.contains(Q2("y^3 - z^2")));
    CHECK(!el.contains(Q2("y")));

    // Homogenizing gives the projective closure, which contains the three
    // quadrics of the twisted cubic.
    Ideal<QQ> h = homogenize(affine, "w");
    RingPtr R3 = h.ctx();
    auto Q3 = [&](const char* s) { return parse_polynomial<QQ>(R3, h.order(), s); };
    CHECK(h.contains(Q3("y^2 - x*z")));
    CHECK(h.contains(Q3("x^2 - w*y")));
    CHECK(h.contains(Q3("x*y - w*z")));
    ZPoly num = hilbert_numerator(h.gb());
    CHECK(dimension_from_numerator(num, 4) == 2);
    CHECK(degree_from_numerator(num) == 3);
}

TEST_CASE("radical membership and same_radical") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> sq(R, ord, {P("x^2")});
    CHECK(radical_membership(P("x"), sq));
    CHECK(!radical_membership(P("y"), sq));
    Ideal<QQ> xy(R, ord, {P("x*y")});
    CHECK(!radical_membership(P("x + y"), xy));

    Ideal<QQ> a(R, ord, {P("x^2"), P("y")});
    Ideal<QQ> b(R, ord, {P("x"), P("y^3")});
    CHECK(same_radical(a, b));
    CHECK(!same_radical(a, xy));
}

TEST_CASE("truncation in low degree") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> px(R, ord, {P("x")});
    Ideal<QQ> tr = truncate_ideal(px, 3);
    Ideal<QQ> expect(R, ord, {P("x^3"), P("x^2*y"), P("x*y^2")});
    CHECK(ideals_equal(tr, expect));
    // Truncating below the generator degrees is the identity.
    CHECK(ideals_equal(truncate_ideal(px, 1), px));
}

TEST_CASE("minimal generator detection") {
    auto E = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };
    CHECK(is_minimal_generator(P("y^2*z - x^2*t"), E.J));
    CHECK(is_minimal_generator(P("x^2*z^3 - x*y^2*t^2"), E.J));
    // A multiple of a generator is not minimal.
    CHECK(!is_minimal_generator(P("x*y^2*z - x^3*t"), E.J));
    // Nonmembers are rejected.
    CHECK(!is_minimal_generator(P("x"), E.J));
}

TEST_CASE("monomial curve ideals") {
    // The degree-(1,2,3) curve is the twisted cubic.
    MonomialOrder ord = MonomialOrder::grevlex();
    Ideal<QQ> tc = monomial_curve_ideal<QQ>({1, 2}, {"x", "y", "z"}, 0, ord);
    auto P = [&](const char* s) { return parse_polynomial<QQ>(tc.ctx(), ord, s); };
    CHECK(tc.contains(P("y^2 - x*z")));
    CHECK(tc.gb().elements().size() == 1);

    // The (1, 6, 8) curve matches the explicitly pinned family ideal.
    auto E = example22<QQ>();
    Ideal<QQ> c = monomial_curve_ideal<QQ>({1, 6, 8}, {"x", "y", "z", "t"}, 0, ord);
    CHECK(c.contains_ideal(E.b));
    CHECK(E.b.contains_ideal(c));
    CHECK(c.gb().elements().size() == 5);
}

TEST_CASE("nonzerodivisor detection") {
    auto E21 = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E21.ring, E21.ord, s); };
    // z is a zerodivisor modulo J (it lies in an associated prime's
    // annihilated locus) but y is not.
    CHECK(!is_nonzerodivisor(P("z"), E21.J));
    CHECK(is_nonzerodivisor(P("y"), E21.J));
}
