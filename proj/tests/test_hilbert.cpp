// Hilbert numerators, series, functions, dimension, and degree.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

TEST_CASE("integer polynomial utility type") {
    ZPoly p;
    p = p + ZPoly::monomial(0, 1) + ZPoly::monomial(3, -1) + ZPoly::monomial(7, 2);
    CHECK(p.to_string() == "1 - t^3 + 2*t^7");
    CHECK(p.eval_one() == 2);
    CHECK(p.shifted(2).to_string() == "t^2 - t^5 + 2*t^9");
    ZPoly q = ZPoly::monomial(0, 1) + ZPoly::monomial(1, -1);  // 1 - t
    ZPoly prod = p * q;
    CHECK(prod.divided_by_one_minus_t() == p);
    CHECK(p == p);
    CHECK(!(p == q));
}

TEST_CASE("pinned numerator, degree, and dimension of the saturated quotient") {
    auto E = example21<QQ>();
    ZPoly num = hilbert_numerator(E.Kid.gb());
    CHECK(num.to_string() == "1 - t^3 - t^4 - t^5 + t^6 + 2*t^7 - t^8");
    CHECK(dimension_from_numerator(num, 4) == 2);
    CHECK(degree_from_numerator(num) == 10);
    CHECK(hilbert_series_string(num, 4) ==
          "(1 - t^3 - t^4 - t^5 + t^6 + 2*t^7 - t^8)/(1-t)^4");
}

TEST_CASE("series from leading terms equals series from the resolution") {
    auto E = example21<QQ>();
    for (const Ideal<QQ>* I : {&E.I, &E.J, &E.Kid}) {
        GradedComplex<QQ> res = resolve_quotient<QQ>(E.ring, E.ord, I->generators());
        CHECK(hilbert_numerator(I->gb()) == series_numerator_from_resolution(res));
    }
}

TEST_CASE("hilbert function by brute standard-monomial count") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    GroebnerBasis<QQ> gb = buchberger<QQ>(R, ord, {P("x^2"), P("x*y")});
    // Standard monomials: 1 | x, y | y^2 | y^3 | ...
    std::vector<long> expect = {1, 2, 1, 1, 1, 1, 1};
    for (std::size_t d = 0; d < expect.size(); ++d)
        CHECK(hilbert_function_quotient(gb, static_cast<int>(d)) == expect[d]);
}

TEST_CASE("hilbert function of the full ring and a hypersurface") {
    RingPtr R = make_ring({"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex();
    GroebnerBasis<QQ> zero = buchberger<QQ>(R, ord, {});
    for (int d = 0; d <= 6; ++d)
        CHECK(hilbert_function_quotient(zero, d) == (d + 1) * (d + 2) / 2);

    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    GroebnerBasis<QQ> quad = buchberger<QQ>(R, ord, {P("x^2 + y^2 + z^2")});
    for (int d = 2; d <= 6; ++d)
        CHECK(hilbert_function_quotient(quad, d) ==
              (d + 1) * (d + 2) / 2 - (d - 1) * d / 2);
}

TEST_CASE("degree of a monomial curve equals the top parameter") {
    MonomialOrder ord = MonomialOrder::grevlex();
    for (long top : {3L, 6L, 8L}) {
        Ideal<QQ> c = monomial_curve_ideal<QQ>({1, top}, {"x", "y", "z"}, 0, ord);
        ZPoly num = hilbert_numerator(c.gb());
        CHECK(degree_from_numerator(num) == top);
        CHECK(dimension_from_numerator(num, 3) == 2);
    }
}
