// Monomial arithmetic and the four monomial orders.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

TEST_CASE("monomial construction and arithmetic") {
    Monomial one = Monomial::one(3);
    CHECK(one.is_one());
    CHECK(one.deg() == 0);

    Monomial x2 = Monomial::var(3, 0, 2);   // x^2
    Monomial yz = Monomial::var(3, 1) * Monomial::var(3, 2);
    CHECK(x2.deg() == 2);
    CHECK(yz.deg() == 2);
    CHECK(x2[0] == 2);
    CHECK(yz[1] == 1);

    Monomial p = x2 * yz;  // x^2 y z
    CHECK(p.deg() == 4);
    CHECK(yz.divides(p));
    CHECK(!p.divides(yz));
    CHECK(p.divided_by(yz) == x2);
    CHECK_THROWS_AS(yz.divided_by(x2), std::domain_error);

    Monomial l = lcm(x2, yz);
    CHECK(l == p);  // disjoint supports: lcm is the product
    CHECK(x2.divides(l));
    CHECK(yz.divides(l));
    CHECK(l.deg() == 4);
}

TEST_CASE("monomial guards") {
    CHECK_THROWS_AS(Monomial(kMaxVars + 1), std::invalid_argument);
    Monomial m(2);
    CHECK_THROWS_AS(m.set(5, 1), std::out_of_range);
    CHECK_THROWS_AS(m.set(0, 0x10000u), std::overflow_error);
}

TEST_CASE("grevlex vs lex leading terms") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder grevlex = MonomialOrder::grevlex();
    MonomialOrder lex = MonomialOrder::lex();

    // Same total degree: grevlex prefers the monomial with the smaller
    // exponent on the last variable; lex prefers higher power of x.
    auto f_grev = parse_polynomial<QQ>(R, grevlex, "x*y^2 + x^2*z");
    CHECK(poly_to_string(f_grev) == "x*y^2 + x^2*z");  // x*y^2 leads
    auto f_lex = parse_polynomial<QQ>(R, lex, "x*y^2 + x^2*z");
    CHECK(poly_to_string(f_lex) == "x^2*z + x*y^2");   // x^2*z leads

    // grevlex is degree-first, lex is not.
    auto g_grev = parse_polynomial<QQ>(R, grevlex, "x + y^5");
    CHECK(poly_to_string(g_grev) == "y^5 + x");
    auto g_lex = parse_polynomial<QQ>(R, lex, "x + y^5");
    CHECK(poly_to_string(g_lex) == "x + y^5");
}

TEST_CASE("block order eliminates the first block") {
    RingPtr R = make_ring({"a", "x"});
    MonomialOrder blk = MonomialOrder::block_elim(1);
    // Any monomial involving `a` beats any power of x.
    auto f = parse_polynomial<QQ>(R, blk, "a + x^7");
    CHECK(poly_to_string(f) == "a + x^7");
    MonomialOrder grevlex = MonomialOrder::grevlex();
    auto g = parse_polynomial<QQ>(R, grevlex, "a + x^7");
    CHECK(poly_to_string(g) == "x^7 + a");
}

TEST_CASE("weighted order uses the weight vector") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder w = MonomialOrder::weighted({1, 3});
    // wdeg(y) = 3 > wdeg(x^2) = 2.
    auto f = parse_polynomial<QQ>(R, w, "x^2 + y");
    CHECK(poly_to_string(f) == "y + x^2");
}

TEST_CASE("order comparison is antisymmetric and total on samples") {
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<Monomial> ms;
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b) {
            Monomial m(2);
            m.set(0, a);
            m.set(1, b);
            ms.push_back(m);
        }
    for (const auto& a : ms)
        for (const auto& b : ms) {
            int c1 = ord.cmp(a, b), c2 = ord.cmp(b, a);
            CHECK(c1 == -c2);
            if (&a != &b && !(a == b)) CHECK(c1 != 0);
        }
}
