// Presented modules, Ext duals, torsion, socles, local cohomology dimensions.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

namespace {
// dim_K R_d for a polynomial ring in n variables.
long ring_dim(int n, int d) {
    if (d < 0) return 0;
    long r = 1;
    for (int i = 1; i < n; ++i) r = r * (d + i) / i;
    return r;
}
}  // namespace

TEST_CASE("quotient module matches the hilbert function") {
    auto E = example21<QQ>();
    PresentedModule<QQ> M = quotient_module(E.J);
    for (int d = 0; d <= 8; ++d)
        CHECK(M.graded_dimension(d) == hilbert_function_quotient(E.J.gb(), d));
    CHECK(!M.is_zero());
    CHECK(module_regularity(M) == 4);
}

TEST_CASE("Ext vanishes below the codimension and at 0 for proper ideals") {
    auto E = example21<QQ>();
    // codim J = 2 in four variables.
    CHECK(ext_cyclic<QQ>(E.J, 0, -4).is_zero());
    CHECK(ext_cyclic<QQ>(E.J, 1, -4).is_zero());
    CHECK(!ext_cyclic<QQ>(E.J, 2, -4).is_zero());
    CHECK_THROWS_AS(ext_cyclic<QQ>(E.J, -1, -4), std::invalid_argument);
    CHECK_THROWS_AS(ext_cyclic<QQ>(E.J, 5, -4), std::invalid_argument);
}

TEST_CASE("Ext Euler characteristic equals the resolution's dual Euler characteristic") {
    auto E = example21<QQ>();
    GradedComplex<QQ> res = resolve_quotient<QQ>(E.ring, E.ord, E.J.generators());
    const int n = 4, tw = -4;
    for (int d = -2; d <= 3; ++d) {
        mpz_class lhs = 0;
        int sign = 1;
        for (int q = 0; q <= n; ++q) {
            lhs += sign * ext_cyclic<QQ>(E.J, q, tw).graded_dimension(d);
            sign = -sign;
        }
        // Free dual: Hom(R(-a), R(tw))_d has dimension dim R_{d + a + tw}.
        mpz_class rhs = 0;
        sign = 1;
        for (std::size_t j = 0; j < res.twists.size(); ++j) {
            for (int a : res.twists[j]) rhs += sign * ring_dim(n, d + a + tw);
            sign = -sign;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("torsion and socle of a small quotient") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> I(R, ord, {P("x^2"), P("x*y")});
    PresentedModule<QQ> M = quotient_module(I);
    Ideal<QQ> mm(R, ord, {P("x"), P("y")});

    // H^0_m(R/I) = (x)/(x^2, xy) is one-dimensional, concentrated in degree 1.
    auto [tors, rest] = torsion_submodule(M, mm);
    CHECK(tors.graded_dimension(0) == 0);
    CHECK(tors.graded_dimension(1) == 1);
    CHECK(tors.graded_dimension(2) == 0);

    // The residual module has no further torsion.
    auto [tors2, rest2] = torsion_submodule(rest, mm);
    CHECK(tors2.is_zero());

    // Socle degrees of the quotient: x only.
    std::vector<int> soc = socle_degrees(M);
    std::sort(soc.begin(), soc.end());
    CHECK(soc == std::vector<int>{1});

    // Socle sits inside the torsion: every socle degree carries torsion.
    for (int d : soc) CHECK(tors.graded_dimension(d) > 0);
}

TEST_CASE("local cohomology dimensions reflect depth and saturation") {
    auto E = example21<QQ>();
    // depth R/J = depth R/K = 2: h^0 and h^1 vanish identically.
    for (const Ideal<QQ>* I : {&E.J, &E.Kid}) {
        auto h0 = local_cohomology_dims(*I, 0, -3, 8);
        auto h1 = local_cohomology_dims(*I, 1, -3, 8);
        for (const auto& v : h0) CHECK(v == 0);
        for (const auto& v : h1) CHECK(v == 0);
    }

    // Truncating a saturated ideal creates exactly the chopped-off torsion:
    // h^0(R/K_{>=5})_d = HF(R/K_{>=5}, d) - HF(R/K, d).
    Ideal<QQ> tr = truncate_ideal(E.Kid, 5);
    auto h0t = local_cohomology_dims(tr, 0, 0, 8);
    for (int d = 0; d <= 8; ++d) {
        mpz_class diff = hilbert_function_quotient(tr.gb(), d) -
                         hilbert_function_quotient(E.Kid.gb(), d);
        CHECK(h0t[static_cast<std::size_t>(d)] == diff);
    }
}

TEST_CASE("deficiency module of a curve matches the sumset gap count") {
    // For the coordinate ring of the smooth monomial curve (1, 6, 8), the
    // first local cohomology in degree a counts the non-representable values:
    // dim h^1_a = (8a + 1) - |a-fold sumset of {0, 1, 6, 8}|.
    auto E22 = example22<QQ>();
    auto h1 = local_cohomology_dims(E22.b, 1, 0, 12);
    mpz_class total = 0;
    for (const auto& v : h1) total += v;
    CHECK(total > 0);  // the curve is not arithmetically Cohen-Macaulay
    for (long long a = 0; a <= 12; ++a) {
        long long expect = 8 * a + 1 - sumset_count_oracle({0, 1, 6, 8}, a);
        CHECK(h1[static_cast<std::size_t>(a)] == expect);
    }
}

TEST_CASE("module regularity rejects the zero module") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
    Ideal<QQ> unit(R, ord, {P("1")});
    PresentedModule<QQ> Z = quotient_module(unit);
    CHECK(Z.is_zero());
    CHECK_THROWS(module_regularity(Z));
}
