// Named ideal families and the sumset counting machinery.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

namespace {
template <class K>
bool ideals_equal(const Ideal<K>& a, const Ideal<K>& b) {
    return a.contains_ideal(b) && b.contains_ideal(a);
}
}  // namespace

TEST_CASE("first family bundle satisfies its defining relations") {
    auto E = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };
    Ideal<QQ> L(E.ring, E.ord, {P("z"), P("t")});
    CHECK(ideals_equal(E.J, quotient(E.I, L)));
    CHECK(ideals_equal(E.Kid, saturate(E.I, L)));
}

TEST_CASE("curve bundle matches its monomial curve") {
    auto E = example22<QQ>();
    Ideal<QQ> c =
        monomial_curve_ideal<QQ>({1, 6, 8}, {"x", "y", "z", "t"}, 0, MonomialOrder::grevlex());
    CHECK(c.contains_ideal(E.b));
    CHECK(E.b.contains_ideal(c));
}

TEST_CASE("parametrized family at small sizes") {
    for (auto [m, n] : {std::pair<long, long>{1, 1}, {2, 1}}) {
        auto F = cm_family<QQ>(m, n);
        CHECK(regularity_of_ideal<QQ>(F.ring, F.ord, F.I.generators()) == F.expected_reg_I);
        CHECK(F.expected_reg_I == m + n + 2);
        CHECK(regularity_of_ideal<QQ>(F.ring, F.ord, F.image.generators()) ==
              F.expected_reg_image);
        CHECK(F.expected_reg_image == m * n + 2);
        ZPoly num = hilbert_numerator(F.image.gb());
        CHECK(degree_from_numerator(num) == F.expected_deg_image);
        CHECK(F.expected_deg_image == m * (n + 2) + 2);

        // The augmented complex is exact and its image ideal is the curve
        // cut down by the two coordinate planes.
        F.complex.validate_graded();
        CHECK(check_composition_zero(F.complex));
        CHECK(buchsbaum_eisenbud(F.complex).exact);

        Ideal<QQ> IC = monomial_curve_ideal<QQ>(F.curve_degrees, {"x", "y", "z", "t"}, 0, F.ord);
        auto P = [&](const char* s) { return parse_polynomial<QQ>(F.ring, F.ord, s); };
        Ideal<QQ> xz(F.ring, F.ord, {P("x"), P("z")});
        Ideal<QQ> zt(F.ring, F.ord, {P("z"), P("t")});
        Ideal<QQ> cut = intersect(intersect(IC, xz), zt);
        CHECK(ideals_equal(F.image, cut));

        // The stated witnesses are minors of the presentation matrix.
        Ideal<QQ> mi = minors_ideal(F.complex.maps[1], static_cast<int>(n) + 1, F.ring, F.ord);
        CHECK(mi.contains(F.minor_witness_a));
        CHECK(mi.contains(F.minor_witness_b));
    }
}

TEST_CASE("second parametrized family at (1,3)") {
    auto F = p4_family<QQ>(1, 3);
    CHECK(ideals_equal(F.J, quotient(F.J0, F.colon_by)));
    CHECK(F.IC.contains(F.M1));
    CHECK(F.IC.contains(F.M2));
    CHECK(is_minimal_generator(F.M1, F.IC));
    CHECK(is_minimal_generator(F.M2, F.IC));
    CHECK(F.expected_reg_J == 1 + 2 * 3 + 1);
    CHECK(F.expected_reg_IC == 9);
    // The curve member of the bundle is the stated monomial curve.
    Ideal<QQ> c = monomial_curve_ideal<QQ>(F.curve_degrees, {"x", "y", "z", "u", "v"}, 0, F.ord);
    CHECK(ideals_equal(c, F.IC));
}

TEST_CASE("surface ideals and the pinned non-member") {
    auto S = surface_ideal<QQ>("ex34", 0);
    CHECK(S.P.is_homogeneous());
    auto P = [&](const char* s) { return parse_polynomial<QQ>(S.ring, S.ord, s); };
    CHECK(!S.P.contains(P("x3^2*x4^3 - x1*x2")));
    CHECK_THROWS_AS(surface_ideal<QQ>("nope", 0), std::invalid_argument);
    CHECK_THROWS_AS(surface_ideal<QQ>("ex34", 7), std::invalid_argument);
}

TEST_CASE("sumset oracle on tiny bases") {
    CHECK(sumset_count_oracle({0, 1}, 5) == 6);
    CHECK(sumset_count_oracle({0}, 9) == 1);
    CHECK(sumset_count_oracle({0, 2}, 3) == 4);         // 0, 2, 4, 6
    CHECK(sumset_count_oracle({0, 1, 6, 8}, 1) == 4);
    CHECK(sumset_count_oracle({0, 1, 6, 8}, 2) == 10);  // 0,1,2,6..10,12,14,16
    CHECK_THROWS_AS(sumset_count_oracle({1, 2}, 3), std::invalid_argument);   // no zero
    CHECK_THROWS_AS(sumset_count_oracle({0, -1}, 3), std::invalid_argument);  // negative
    CHECK_THROWS_AS(sumset_count_oracle({0, 1}, -1), std::invalid_argument);  // bad alpha
}

TEST_CASE("closed sumset formula agrees with the oracle on its range") {
    for (auto [m, n] : {std::pair<long long, long long>{1, 1}, {1, 3}, {2, 2}, {3, 3}}) {
        SumsetSpec spec(m, n);
        auto base = spec.base();
        for (long long a = spec.closed_form_threshold();
             a <= spec.closed_form_threshold() + 10; ++a)
            CHECK(sumset_count_closed(spec, a) == sumset_count_oracle(base, a));
        CHECK_THROWS_AS(sumset_count_closed(spec, spec.closed_form_threshold() - 1),
                        std::invalid_argument);
    }
}

TEST_CASE("gap counts vanish past the vanishing threshold") {
    SumsetSpec spec(1, 3);
    // Above the vanishing threshold the count sits on the exact line
    // lead * alpha - cnst, i.e. the gap count is zero.
    long long lead = spec.m * (spec.n + 1) * (spec.n + 1);
    long long cnst = spec.m * (spec.m - 1) / 2 * (spec.n + 1) * (spec.n + 1) +
                     spec.m * (spec.n * spec.n - 1);
    for (long long a = spec.gap_vanishing_threshold();
         a <= spec.gap_vanishing_threshold() + 6; ++a)
        CHECK(sumset_count_oracle(spec.base(), a) == lead * a - cnst);
}

TEST_CASE("sumset gaps versus curve cohomology") {
    // On the gap formula's validity window the combinatorial count equals the
    // curve's first local cohomology dimension degree by degree.
    SAlphaReport rep = s_alpha_vs_h1(1, 3, 6, 9);
    bool any_applicable = false;
    for (const auto& row : rep.rows) {
        if (!row.applicable) continue;
        any_applicable = true;
        CHECK(row.equal);
        CHECK(row.gap_closed == row.h1_dim);
    }
    CHECK(any_applicable);
    CHECK(rep.all_equal);

    // Exact totals refute the asymptotic reference bound at this small size.
    SAlphaReport full = s_alpha_vs_h1(1, 3, 1, 20);
    CHECK(full.h1_total == 31);
    CHECK(full.reference_bound == 61);
    CHECK(!full.bound_met);
}
