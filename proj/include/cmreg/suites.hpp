// Named verification suites.
//
// Each suite recomputes a bundle of facts about the families in
// families.hpp and reports one named check per claim, with printable
// expected and actual values.  Reports are deterministic: checks are
// emitted in name order and contain no timing or environment data.
//
// A check flagged `documented_deviation` records an external reference
// value that exact computation refutes.  Such a check reports as a
// deviation rather than a hard failure, and the exact computed value is
// pinned by a companion check right next to it, so a regression in the
// computation itself still fails the suite.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/families.hpp"
#include "cmreg/homology.hpp"
#include "cmreg/sumset.hpp"
#include "cmreg/verify.hpp"

namespace cmreg {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool documented_deviation = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int passed() const {
        int k = 0;
        for (const auto& c : checks)
            if (c.pass) ++k;
        return k;
    }
    int deviations() const {
        int k = 0;
        for (const auto& c : checks)
            if (!c.pass && c.documented_deviation) ++k;
        return k;
    }
    int failed() const {
        int k = 0;
        for (const auto& c : checks)
            if (!c.pass && !c.documented_deviation) ++k;
        return k;
    }
    bool ok() const { return failed() == 0; }

    // Deterministic merge order: ascending by check name.
    void sort_checks() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }
};

namespace detail {

inline std::string flat(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    for (auto& ch : s)
        if (ch == '\n') ch = ';';
    return s;
}

class Checker {
  public:
    explicit Checker(SuiteReport& r) : r_(r) {}

    void record(const std::string& name, const std::string& expected, const std::string& actual,
                bool pass, bool deviation = false, const std::string& note = "") {
        r_.checks.push_back({name, flat(expected), flat(actual), pass, deviation, note});
    }

    void equal_strings(const std::string& name, const std::string& expected,
                       const std::string& actual) {
        record(name, expected, actual, expected == actual);
    }

    template <class T>
    void equal_values(const std::string& name, const T& expected, const T& actual) {
        std::ostringstream we, wa;
        we << expected;
        wa << actual;
        record(name, we.str(), wa.str(), expected == actual);
    }

    void is_true(const std::string& name, bool actual, const std::string& claim) {
        record(name, "true", actual ? "true" : "false", actual, false, claim);
    }

  private:
    SuiteReport& r_;
};

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Composition-zero, graded consistency, and the exactness criterion in one verdict.
template <class K>
bool complex_is_exact(const GradedComplex<K>& C) {
    C.validate_graded();  // throws on inconsistent twist data
    return check_composition_zero(C) && buchsbaum_eisenbud(C).exact;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suite "ex21": the two-generated space-curve ideal I = (y^2*z - x^2*t,
// z^4 - x*t^3), its colon J = I : (z,t), and K = J + (x^4*z^2 - x*y^4*t).
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_ex21() {
    SuiteReport rep;
    rep.suite = "ex21";
    detail::Checker ck(rep);
    auto E = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };

    // 1. the colon of I by (z,t) adjoins exactly one new generator
    {
        Ideal<QQ> zt(E.ring, E.ord, {P("z"), P("t")});
        Ideal<QQ> expect =
            ideal_sum(E.I, Ideal<QQ>(E.ring, E.ord, {P("x*y^2*t^2 - x^2*z^3")}));
        ck.record("1_colon_line", "I : (z,t) == I + (x*y^2*t^2 - x^2*z^3)",
                  quotient(E.I, zt) == expect ? "equal" : "different",
                  quotient(E.I, zt) == expect);
    }
    // 2. regularities of the three ideals
    {
        int rI = regularity_of_ideal<QQ>(E.ring, E.ord, E.I.generators());
        int rJ = regularity_of_ideal<QQ>(E.ring, E.ord, E.J.generators());
        int rK = regularity_of_ideal<QQ>(E.ring, E.ord, E.Kid.generators());
        ck.equal_strings("2_regularities", "reg I,J,K = 6,5,6",
                         "reg I,J,K = " + std::to_string(rI) + "," + std::to_string(rJ) + "," +
                             std::to_string(rK));
    }
    // 3-4. the explicit resolutions have the Betti tables of the computed
    // minimal resolutions, twist for twist
    {
        BettiTable wantJ = betti_table(E.j_complex);
        BettiTable gotJ = betti_table(resolve_quotient<QQ>(E.ring, E.ord, E.J.generators()));
        ck.equal_strings("3_betti_J", wantJ.to_string(), gotJ.to_string());
        BettiTable wantK = betti_table(E.k_complex);
        BettiTable gotK = betti_table(resolve_quotient<QQ>(E.ring, E.ord, E.Kid.generators()));
        ck.equal_strings("4_betti_K", wantK.to_string(), gotK.to_string());
    }
    // 5. I, J, K cut out the same set
    ck.is_true("5_radical_chain", same_radical(E.I, E.J) && same_radical(E.J, E.Kid),
               "same_radical(I,J) and same_radical(J,K)");
    // 6. the square of the last adjoined generator already lies in J
    {
        Polynomial<QQ> g = P("x^4*z^2 - x*y^4*t");
        ck.is_true("6_power_membership", E.J.contains(g * g), "(x^4*z^2 - x*y^4*t)^2 in J");
    }
    // 7. K is saturated; Hilbert numerator and degree of R/K
    {
        Ideal<QQ> mm(E.ring, E.ord, {P("x"), P("y"), P("z"), P("t")});
        bool sat = saturate(E.Kid, mm) == E.Kid;
        ZPoly num = hilbert_numerator(E.Kid.gb());
        mpz_class deg = degree_from_numerator(num);
        std::string got = std::string(sat ? "saturated" : "not saturated") + "; " + num.to_string() +
                          "; degree " + deg.get_str();
        ck.equal_strings("7_saturated_hilbert_degree",
                         "saturated; 1 - t^3 - t^4 - t^5 + t^6 + 2*t^7 - t^8; degree 10", got);
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "ex22": the monomial curve (1,6,8) in P^3 and its explicit
// length-three resolution, plus principal-multiple regularity shifts.
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_ex22() {
    SuiteReport rep;
    rep.suite = "ex22";
    detail::Checker ck(rep);
    auto E = example22<QQ>();
    auto E21 = example21<QQ>();
    auto P = [&](const char* s) { return parse_polynomial<QQ>(E.ring, E.ord, s); };

    {
        Ideal<QQ> curve = monomial_curve_ideal<QQ>({1, 6, 8}, {"x", "y", "z", "t"}, 0, E.ord);
        ck.record("1_generators_match_curve", "b == ideal of the monomial curve (1,6,8)",
                  E.b == curve ? "equal" : "different", E.b == curve);
    }
    {
        BettiTable want = betti_table(E.b_complex);
        BettiTable got = betti_table(resolve_quotient<QQ>(E.ring, E.ord, E.b.generators()));
        ck.equal_strings("2_betti_curve", want.to_string(), got.to_string());
    }
    ck.equal_values("3_reg_curve", 6, regularity_of_ideal<QQ>(E.ring, E.ord, E.b.generators()));
    ck.is_true("4_complex_exact", detail::complex_is_exact(E.b_complex),
               "displayed matrices compose to zero and pass the exactness criterion");
    {
        Polynomial<QQ> z = P("z");
        Ideal<QQ> zid(E.ring, E.ord, {z});
        Ideal<QQ> zb = multiply(z, E.b);
        ck.record("5_z_intersection", "(z) ∩ b == z*b",
                  intersect(zid, E.b) == zb ? "equal" : "different", intersect(zid, E.b) == zb);
        ck.equal_values("6_reg_z_intersection", 7,
                        regularity_of_ideal<QQ>(E.ring, E.ord, zb.generators()));
    }
    {
        Ideal<QQ> zJ = multiply(parse_polynomial<QQ>(E21.ring, E21.ord, "z"), E21.J);
        ck.equal_values("7_reg_z_times_J", 6,
                        regularity_of_ideal<QQ>(E21.ring, E21.ord, zJ.generators()));
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "lemma24": the two-generated family I_{m,n} = (x^m*t - y^m*z,
// z^{n+2} - x*t^{n+1}) with its explicit residual complex, over the five
// sample pairs (1,1), (1,2), (2,1), (2,2), (3,2).
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_lemma24() {
    SuiteReport rep;
    rep.suite = "lemma24";
    detail::Checker ck(rep);

    for (auto [m, n] : {std::pair<long, long>{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}}) {
        auto F = cm_family<QQ>(m, n);
        auto P = [&](const char* s) { return parse_polynomial<QQ>(F.ring, F.ord, s); };
        std::string tag = "m" + std::to_string(m) + "n" + std::to_string(n);

        ck.equal_values(tag + "_1_reg_I", F.expected_reg_I,
                        regularity_of_ideal<QQ>(F.ring, F.ord, F.I.generators()));
        ck.is_true(tag + "_2_complex_exact", detail::complex_is_exact(F.complex),
                   "constructed complex composes to zero and passes the exactness criterion");
        {
            Ideal<QQ> IC =
                monomial_curve_ideal<QQ>(F.curve_degrees, {"x", "y", "z", "t"}, 0, F.ord);
            Ideal<QQ> xz(F.ring, F.ord, {P("x"), P("z")});
            Ideal<QQ> zt(F.ring, F.ord, {P("z"), P("t")});
            Ideal<QQ> expect = intersect(intersect(IC, xz), zt);
            ck.record(tag + "_3_image_unmixed",
                      "image ideal == curve ∩ (x,z) ∩ (z,t)",
                      F.image == expect ? "equal" : "different", F.image == expect);
        }
        ck.equal_values(tag + "_4_reg_image", F.expected_reg_image,
                        regularity_of_ideal<QQ>(F.ring, F.ord, F.image.generators()));
        {
            mpz_class deg = degree_from_numerator(hilbert_numerator(F.image.gb()));
            ck.equal_values(tag + "_5_degree_image", mpz_class(F.expected_deg_image), deg);
        }
        ck.is_true(tag + "_6_same_radical", same_radical(F.I, F.image),
                   "I and the image ideal cut out the same set");
        {
            Ideal<QQ> zI = multiply(P("z"), F.I);
            ck.equal_values(tag + "_7_reg_z_shift", F.expected_reg_I + 1,
                            regularity_of_ideal<QQ>(F.ring, F.ord, zI.generators()));
        }
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "ex25": the three-generated family in five variables at
// (m,n) = (1,3), its colon identity, the monomial curve (1,9,12,16), and
// the union-with-a-line Hilbert identity.
//
// Check 6 carries an external reference value (regularity 3 for the
// intersection with the line's ideal) that exact computation refutes; the
// computed value 5 is pinned by check 7.
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_ex25() {
    SuiteReport rep;
    rep.suite = "ex25";
    detail::Checker ck(rep);
    auto F = p4_family<QQ>(1, 3);
    auto P = [&](const char* s) { return parse_polynomial<QQ>(F.ring, F.ord, s); };

    {
        bool eq = quotient(F.J0, F.colon_by) == F.J;
        ck.record("1_colon_identity", "J0 : (x, z^4, u^2) == J0 + (y*v^3 - z*u^2*v)",
                  eq ? "equal" : "different", eq);
    }
    {
        int rJ = regularity_of_ideal<QQ>(F.ring, F.ord, F.J.generators());
        int rJ0 = regularity_of_ideal<QQ>(F.ring, F.ord, F.J0.generators());
        ck.equal_strings("2_reg_J", "reg J = 8 = reg J0 - 1 = 9 - 1",
                         "reg J = " + std::to_string(rJ) + " = reg J0 - 1 = " +
                             std::to_string(rJ0) + " - 1");
    }
    {
        mpz_class deg = degree_from_numerator(hilbert_numerator(F.J.gb()));
        ck.equal_values("3_deg_J", mpz_class(F.expected_deg_J), deg);
    }
    ck.equal_values("4_reg_curve", 9, regularity_of_ideal<QQ>(F.ring, F.ord, F.IC.generators()));
    ck.is_true("5_minimal_generators",
               is_minimal_generator(F.M1, F.IC) && is_minimal_generator(F.M2, F.IC),
               "y^9 - x^8*z and y^2*v - x*z^2 are minimal generators of the curve ideal");

    Ideal<QQ> inter = intersect(F.IC, F.L);
    int reg_inter = regularity_of_ideal<QQ>(F.ring, F.ord, inter.generators());
    ck.record("6_reg_intersection_reference", "3", std::to_string(reg_inter), reg_inter == 3,
              /*deviation=*/true,
              "external reference value refuted by exact computation: the intersection has two "
              "minimal generators of degree 5, and h^1 of its coordinate ring is nonzero in "
              "degrees 2 and 3; the computed regularity is pinned by 7_reg_intersection_computed "
              "and is reproduced over F_101");
    ck.equal_values("7_reg_intersection_computed", 5, reg_inter);
    ck.is_true("8_radical_intersection", same_radical(inter, F.J),
               "the intersection and J cut out the same set");
    {
        // H_{R/(IC ∩ L)}(a) == H_{R/IC}(a) + (a+1) - min(a+1, 9) for a <= 30
        bool all = true;
        int bad = -1;
        for (int a = 0; a <= 30 && all; ++a) {
            mpz_class lhs = hilbert_function_quotient(inter.gb(), a);
            mpz_class rhs = hilbert_function_quotient(F.IC.gb(), a) + (a + 1) -
                            std::min<long>(a + 1, 9);
            if (lhs != rhs) {
                all = false;
                bad = a;
            }
        }
        ck.record("9_hilbert_identity",
                  "series of R/(IC ∩ L) == series of R/IC + 1/(1-t)^2 - (1-t^9)/(1-t)^2, "
                  "coefficientwise to degree 30",
                  all ? "holds to degree 30" : "fails at degree " + std::to_string(bad), all);
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "appendix": sumset counting for the numerical semigroup generated by
// {1, mn^2, mn(n+1), m(n+1)^2}: dynamic-programming oracle vs closed form,
// gap vanishing, agreement with the Hilbert function of the monomial curve,
// and agreement of gap counts with h^1 of the curve's coordinate ring.
//
// Check 7 carries an external reference bound (total h^1 length >= 61 at
// (1,3), from the general bound ceil(m^2 n^5 / 4)) that exact computation
// refutes at this small parameter pair; the exact total 31 and the
// per-degree dimensions are pinned by check 8.
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_appendix() {
    SuiteReport rep;
    rep.suite = "appendix";
    detail::Checker ck(rep);

    // 1-3. oracle == closed form on [threshold, threshold+25]
    {
        int idx = 1;
        for (auto [m, n] : {std::pair<long, long>{1, 3}, {1, 4}, {2, 3}}) {
            SumsetSpec spec(m, n);
            auto base = spec.base();
            bool all = true;
            long long bad = -1;
            for (long long a = spec.closed_form_threshold();
                 a <= spec.closed_form_threshold() + 25 && all; ++a)
                if (sumset_count_closed(spec, a) != sumset_count_oracle(base, a)) {
                    all = false;
                    bad = a;
                }
            ck.record(std::to_string(idx) + "_oracle_vs_closed_m" + std::to_string(m) + "n" +
                          std::to_string(n),
                      "oracle == closed form on the 26-value window from the validity threshold",
                      all ? "agree" : "disagree at alpha = " + std::to_string(bad), all);
            ++idx;
        }
    }
    // 4. gaps vanish at and above mn^2 - 1: the count equals its linear form
    {
        bool all = true;
        for (auto [m, n] : {std::pair<long, long>{1, 3}, {1, 4}, {2, 3}}) {
            SumsetSpec spec(m, n);
            auto base = spec.base();
            long long lead = m * (n + 1) * (n + 1);
            long long cnst = m * (m - 1) / 2 * (n + 1) * (n + 1) + m * (n * n - 1);
            for (long long a = spec.gap_vanishing_threshold();
                 a <= spec.gap_vanishing_threshold() + 10; ++a)
                all = all && gap_count_closed(spec, a) == 0 &&
                      sumset_count_oracle(base, a) == lead * a - cnst;
        }
        ck.is_true("4_gap_vanishing", all,
                   "for all three pairs, counts equal the linear polynomial once alpha >= mn^2-1");
    }
    // 5. the oracle counts the Hilbert function of the (1,9,12,16) curve
    {
        SumsetSpec spec(1, 3);
        auto base = spec.base();
        Ideal<QQ> IC = monomial_curve_ideal<QQ>({1, 9, 12, 16}, {"x", "y", "z", "u", "v"}, 0,
                                                MonomialOrder::grevlex());
        bool all = true;
        for (int a = 0; a <= 25; ++a)
            all = all && hilbert_function_quotient(IC.gb(), a) ==
                             mpz_class(static_cast<long>(sumset_count_oracle(base, a)));
        ck.is_true("5_hf_matches_oracle", all,
                   "Hilbert function of R/I_C equals the sumset count for alpha <= 25 at (1,3)");
    }
    // 6. gap counts are h^1 dimensions at (1,4)
    {
        SumsetSpec spec(1, 4);
        Ideal<QQ> IC = monomial_curve_ideal<QQ>({1, 16, 20, 25}, {"x", "y", "z", "u", "v"}, 0,
                                                MonomialOrder::grevlex());
        auto dims = local_cohomology_dims(IC, 1, 9, 16);
        bool all = true;
        for (int a = 9; a <= 16; ++a)
            all = all && dims[a - 9] == mpz_class(static_cast<long>(gap_count_closed(spec, a)));
        ck.is_true("6_h1_matches_gaps_m1n4", all,
                   "dim h^1(R/I_C)_alpha == gap count on the formula's validity range [9,16]");
    }
    // 7-8. total h^1 length at (1,3)
    {
        SumsetSpec spec(1, 3);
        Ideal<QQ> IC = monomial_curve_ideal<QQ>({1, 9, 12, 16}, {"x", "y", "z", "u", "v"}, 0,
                                                MonomialOrder::grevlex());
        auto dims = local_cohomology_dims(IC, 1, -5, 15);
        mpz_class total = 0;
        for (const auto& d : dims) total += d;
        mpz_class bound(static_cast<long>(spec.total_gap_lower_bound()));
        ck.record("7_h1_total_reference", ">= " + bound.get_str(), total.get_str(),
                  total >= bound, /*deviation=*/true,
                  "external reference bound refuted by exact computation: the bound is asymptotic "
                  "and the gap-formula validity window [mn+m+n, mn^2-1] = [7,8] is nearly empty "
                  "at (1,3); the exact total and per-degree dimensions are pinned by "
                  "8_h1_total_computed");
        std::vector<int> got;
        for (int a = 1; a <= 7; ++a) got.push_back(static_cast<int>(dims[a + 5].get_si()));
        std::string gotline = "total " + total.get_str() + "; dims on degrees 1..7 = " +
                              detail::join_ints(got);
        ck.equal_strings("8_h1_total_computed", "total 31; dims on degrees 1..7 = 4,9,8,4,3,2,1",
                         gotline);
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "ex34": the degree-(5,6) parametrized surface in P^4 x ... -> P^4
// (five monomial coordinates in two parameters), over F_101: shape of the
// minimal resolution, the canonical module, and socle data of the
// deficiency module.
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_ex34() {
    SuiteReport rep;
    rep.suite = "ex34";
    detail::Checker ck(rep);
    auto S = surface_ideal<Zp>("ex34", 101);
    const int nvars = 6;

    auto res = resolve_quotient<Zp>(S.ring, S.ord, S.P.generators());
    ck.equal_values("1_resolution_length", 5, projective_dimension(res));

    PresentedModule<Zp> omega = ext_cyclic<Zp>(S.P, 3, -nvars);
    ck.is_true("2_canonical_module_nonzero", !omega.is_zero(),
               "Ext^3(R/P, R(-6)) is the canonical module and is nonzero");

    PresentedModule<Zp> N = ext_cyclic<Zp>(S.P, 4, -nvars);
    {
        std::vector<int> want = {-1, -1, 0, 1};
        std::vector<int> got = socle_degrees(N);
        std::sort(got.begin(), got.end());
        ck.equal_strings("3_socle_degrees", detail::join_ints(want), detail::join_ints(got));
    }
    {
        Ideal<Zp> mm(S.ring, S.ord, {});
        std::vector<Polynomial<Zp>> vars;
        for (int i = 0; i < nvars; ++i)
            vars.push_back(Polynomial<Zp>::variable(S.ring, S.ord, i));
        mm = Ideal<Zp>(S.ring, S.ord, vars);
        auto parts = torsion_submodule(N, mm);
        ck.equal_values("4_h2_omega_degree_1", mpz_class(1), parts.first.graded_dimension(1));
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "ex35" (slow): the degree-(12,8) parametrized surface over F_101.
// Expect minutes to hours; not part of the default gate.
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_ex35() {
    SuiteReport rep;
    rep.suite = "ex35";
    detail::Checker ck(rep);
    auto S = surface_ideal<Zp>("ex35", 101);
    const int nvars = 6;

    ck.equal_values("1_reg_q", 32, regularity_of_ideal<Zp>(S.ring, S.ord, S.P.generators()));

    PresentedModule<Zp> omega = ext_cyclic<Zp>(S.P, 3, -nvars);
    ck.equal_values("2_reg_omega", 7, module_regularity(omega));

    PresentedModule<Zp> N = ext_cyclic<Zp>(S.P, 4, -nvars);
    {
        std::vector<int> soc = socle_degrees(N);
        bool has5 = std::find(soc.begin(), soc.end(), 5) != soc.end();
        ck.is_true("3_socle_degree_5", has5,
                   "the deficiency module's socle (= socle of h^2 of the canonical module) "
                   "contains an element of degree 5");
    }

    Ideal<Zp> trunc = truncate_ideal(S.P, 21);
    ck.equal_values("4_reg_truncation", 24,
                    regularity_of_ideal<Zp>(S.ring, S.ord, trunc.generators()));
    ck.equal_values("5_depth_q", 1, depth_of_quotient<Zp>(S.ring, S.ord, S.P.generators()));
    ck.equal_values("6_depth_truncation", 2,
                    depth_of_quotient<Zp>(S.ring, S.ord, trunc.generators()));
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Suite "properties": cross-cutting randomized-free invariants on a fixed
// battery of samples (deterministic, no RNG).
// ---------------------------------------------------------------------------
inline SuiteReport run_suite_properties() {
    SuiteReport rep;
    rep.suite = "properties";
    detail::Checker ck(rep);

    // 1. reduced Groebner bases are invariant under generator permutation
    //    and rescaling
    {
        bool all = true;
        {
            auto R = make_ring({"x", "y"}, 0);
            auto ord = MonomialOrder::grevlex();
            auto P = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
            Ideal<QQ> a(R, ord, {P("x^2 + y^2 - 1"), P("x - y")});
            Ideal<QQ> b(R, ord,
                        {P("x - y").scaled(QQ(-7, 3)), P("x^2 + y^2 - 1").scaled(QQ(5, 2))});
            all = all && a.gb().elements() == b.gb().elements();
        }
        {
            auto E = example21<QQ>();
            auto gens = E.Kid.generators();
            std::vector<Polynomial<QQ>> shuf = {gens[2].scaled(QQ(3)), gens[0].scaled(QQ(-1, 2)),
                                                gens[3], gens[1].scaled(QQ(7, 5))};
            Ideal<QQ> other(E.ring, E.ord, shuf);
            all = all && E.Kid.gb().elements() == other.gb().elements();
        }
        ck.is_true("1_gb_determinism", all,
                   "reduced bases agree after permuting and rescaling input generators");
    }

    // 2. the resolution's alternating twist sum reproduces the Hilbert
    //    numerator, on every resolution in the battery
    {
        bool all = true;
        auto check_one = [&](const RingPtr& R, const MonomialOrder& ord, const Ideal<QQ>& I) {
            auto res = resolve_quotient<QQ>(R, ord, I.generators());
            ZPoly a = hilbert_numerator(I.gb());
            ZPoly b = series_numerator_from_resolution(res);
            all = all && a == b;
        };
        auto E21 = example21<QQ>();
        check_one(E21.ring, E21.ord, E21.I);
        check_one(E21.ring, E21.ord, E21.J);
        check_one(E21.ring, E21.ord, E21.Kid);
        auto E22 = example22<QQ>();
        check_one(E22.ring, E22.ord, E22.b);
        check_one(E22.ring, E22.ord,
                  multiply(parse_polynomial<QQ>(E22.ring, E22.ord, "z"), E22.b));
        for (auto [m, n] : {std::pair<long, long>{1, 1}, {2, 2}}) {
            auto F = cm_family<QQ>(m, n);
            check_one(F.ring, F.ord, F.I);
            check_one(F.ring, F.ord, F.image);
        }
        ck.is_true("2_series_cross_validation", all,
                   "hilbert numerator == alternating twist sum for nine sampled resolutions");
    }

    // 3. multiplying by a nonzerodivisor f of the ring (any nonzero form, as
    //    R is a domain and ideals are torsion-free) shifts regularity by deg f
    {
        bool all = true;
        auto check_shift = [&](const RingPtr& R, const MonomialOrder& ord,
                               const Polynomial<QQ>& f, const Ideal<QQ>& I) {
            if (f.is_zero()) {
                all = false;
                return;
            }
            int base = regularity_of_ideal<QQ>(R, ord, I.generators());
            int shifted = regularity_of_ideal<QQ>(R, ord, multiply(f, I).generators());
            all = all && shifted == base + static_cast<int>(f.degree());
        };
        auto E21 = example21<QQ>();
        auto E22 = example22<QQ>();
        check_shift(E21.ring, E21.ord, parse_polynomial<QQ>(E21.ring, E21.ord, "z"), E21.J);
        check_shift(E22.ring, E22.ord, parse_polynomial<QQ>(E22.ring, E22.ord, "z"), E22.b);
        check_shift(E21.ring, E21.ord, parse_polynomial<QQ>(E21.ring, E21.ord, "t"),
                    Ideal<QQ>(E21.ring, E21.ord,
                              {parse_polynomial<QQ>(E21.ring, E21.ord, "x"),
                               parse_polynomial<QQ>(E21.ring, E21.ord, "y")}));
        for (auto [m, n] : {std::pair<long, long>{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}}) {
            auto F = cm_family<QQ>(m, n);
            check_shift(F.ring, F.ord, parse_polynomial<QQ>(F.ring, F.ord, "z"), F.I);
        }
        ck.is_true("3_reg_scaling", all,
                   "reg(f*I) == deg f + reg(I) on eight samples (f a nonzerodivisor of the "
                   "ring, i.e. any nonzero form in a domain)");
    }

    // 4. removing torsion supported on a small-dimensional prime never
    //    raises regularity
    {
        bool all = true;
        auto check_pair = [&](const PresentedModule<QQ>& M, const Ideal<QQ>& p) {
            int regM = module_regularity(M);
            auto parts = torsion_submodule(M, p);
            int regQ = parts.second.is_zero() ? regM : module_regularity(parts.second);
            all = all && regQ <= regM;
        };
        auto E21 = example21<QQ>();
        auto E22 = example22<QQ>();
        auto P4 = [&](const char* s) { return parse_polynomial<QQ>(E22.ring, E22.ord, s); };
        Ideal<QQ> zb = multiply(P4("z"), E22.b);
        Ideal<QQ> zJ = multiply(parse_polynomial<QQ>(E21.ring, E21.ord, "z"), E21.J);
        Ideal<QQ> mm(E22.ring, E22.ord, {P4("x"), P4("y"), P4("z"), P4("t")});
        Ideal<QQ> yzt(E22.ring, E22.ord, {P4("y"), P4("z"), P4("t")});
        check_pair(quotient_module(zb), mm);
        check_pair(quotient_module(zb), yzt);
        check_pair(quotient_module(zJ), mm);
        check_pair(quotient_module(zJ), yzt);
        {
            auto R = make_ring({"x", "y"}, 0);
            auto ord = MonomialOrder::grevlex();
            auto P2 = [&](const char* s) { return parse_polynomial<QQ>(R, ord, s); };
            Ideal<QQ> a(R, ord, {P2("x^2"), P2("x*y")});
            Ideal<QQ> mm2(R, ord, {P2("x"), P2("y")});
            check_pair(quotient_module(a), mm2);
        }
        ck.is_true("4_torsion_reg_inequality", all,
                   "reg(M / H^0_p(M)) <= reg(M) on five (module, prime) samples with "
                   "dim R/p <= 1");
    }

    // 5. explicit complexes that pass the exactness criterion have the Betti
    //    tables of independently computed minimal resolutions
    {
        bool all = true;
        auto check_complex = [&](const GradedComplex<QQ>& C, const RingPtr& R,
                                 const MonomialOrder& ord, const Ideal<QQ>& I) {
            all = all && detail::complex_is_exact(C) &&
                  betti_table(C) == betti_table(resolve_quotient<QQ>(R, ord, I.generators()));
        };
        auto E21 = example21<QQ>();
        check_complex(E21.j_complex, E21.ring, E21.ord, E21.J);
        check_complex(E21.k_complex, E21.ring, E21.ord, E21.Kid);
        auto E22 = example22<QQ>();
        check_complex(E22.b_complex, E22.ring, E22.ord, E22.b);
        for (auto [m, n] : {std::pair<long, long>{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}}) {
            auto F = cm_family<QQ>(m, n);
            check_complex(F.complex, F.ring, F.ord, F.image);
        }
        ck.is_true("5_exact_complexes_betti", all,
                   "eight exactness-verified complexes match computed minimal resolutions "
                   "twist for twist");
    }
    rep.sort_checks();
    return rep;
}

// ---------------------------------------------------------------------------
// Per-degree comparison of the closed-form gap count against h^1 of the
// monomial curve with exponents (1, mn^2, mn(n+1), m(n+1)^2), plus the
// total h^1 length against the general lower bound ceil(m^2 n^5 / 4).
// Degrees outside the closed formula's validity window report the count as
// absent (-1) and compare as not-applicable.
// ---------------------------------------------------------------------------
struct SAlphaRow {
    int alpha = 0;
    long long gap_closed = -1;  // -1: below the formula's validity threshold
    mpz_class h1_dim;
    bool applicable = false;
    bool equal = false;
};

struct SAlphaReport {
    long m = 0, n = 0;
    std::vector<SAlphaRow> rows;
    mpz_class h1_total;         // over the requested range
    mpz_class reference_bound;  // ceil(m^2 n^5 / 4)
    bool bound_met = false;
    bool all_equal = true;  // over applicable rows
};

inline SAlphaReport s_alpha_vs_h1(long m, long n, int lo, int hi) {
    SumsetSpec spec(m, n);
    SAlphaReport rep;
    rep.m = m;
    rep.n = n;
    std::vector<long> degs = {1, long(m * n * n), long(m * n * (n + 1)),
                              long(m * (n + 1) * (n + 1))};
    Ideal<QQ> IC = monomial_curve_ideal<QQ>(degs, {"x", "y", "z", "u", "v"}, 0,
                                            MonomialOrder::grevlex());
    auto dims = local_cohomology_dims(IC, 1, lo, hi);
    rep.h1_total = 0;
    for (int a = lo; a <= hi; ++a) {
        SAlphaRow row;
        row.alpha = a;
        row.h1_dim = dims[a - lo];
        rep.h1_total += row.h1_dim;
        if (a >= spec.gap_formula_threshold()) {
            row.applicable = true;
            row.gap_closed = gap_count_closed(spec, a);
            row.equal = row.h1_dim == mpz_class(static_cast<long>(row.gap_closed));
            rep.all_equal = rep.all_equal && row.equal;
        }
        rep.rows.push_back(row);
    }
    rep.reference_bound = mpz_class(static_cast<long>(spec.total_gap_lower_bound()));
    rep.bound_met = rep.h1_total >= rep.reference_bound;
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"ex21", "ex22", "lemma24", "ex25", "appendix", "ex34", "ex35", "properties"};
}

inline SuiteReport run_suite(const std::string& name) {
    if (name == "ex21") return run_suite_ex21();
    if (name == "ex22") return run_suite_ex22();
    if (name == "lemma24") return run_suite_lemma24();
    if (name == "ex25") return run_suite_ex25();
    if (name == "appendix") return run_suite_appendix();
    if (name == "ex34") return run_suite_ex34();
    if (name == "ex35") return run_suite_ex35();
    if (name == "properties") return run_suite_properties();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

// Line-oriented text serialization: one line per check, then a summary line.
inline std::string report_to_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << "\n";
    for (const auto& c : rep.checks) {
        const char* status = c.pass ? "PASS" : (c.documented_deviation ? "DEVIATION" : "FAIL");
        os << "check " << c.name << " status=" << status << " expected=[" << c.expected
           << "] actual=[" << c.actual << "]";
        if (!c.note.empty()) os << " note=[" << c.note << "]";
        os << "\n";
    }
    os << "summary checks=" << rep.checks.size() << " passed=" << rep.passed()
       << " failed=" << rep.failed() << " deviations=" << rep.deviations() << "\n";
    return os.str();
}

}  // namespace cmreg
