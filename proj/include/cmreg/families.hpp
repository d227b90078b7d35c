#pragma once
// Named ideal families with explicit graded free complexes, used by the
// verification suites and the `family` CLI subcommand.
//
//  * example21  — the space curve I = (y^2 z - x^2 t, z^4 - x t^3) in
//                 k[x,y,z,t] together with its colon relatives
//                 J = I : (z,t) and K = I : (z,t)^2, the explicit minimal
//                 free complexes of R/J and R/K, and two 3x2 matrices whose
//                 2x2 minors cut out residual curves of I.
//  * example22  — the monomial curve (1,6,8) in P^3: its ideal b, and an
//                 explicit complex 0 -> F3 -> F2 -> F1 -> R with the five
//                 minimal generators of b as the augmentation row.
//  * cm_family  — for parameters m,n >= 1, the ideal
//                 I = (x^m t - y^m z, z^{n+2} - x t^{n+1}) and the explicit
//                 complex resolving R modulo the larger ideal
//                 a = (y^m z - x^m t, f_0, ..., f_n),
//                 f_i = x^{im} z^{n+2-i} - x y^{im} t^{n-i+1}, which is the
//                 unmixed part  I_C  ∩ (x,z) ∩ (z,t)  of I for the monomial
//                 curve C = (1, m(n+1), m(n+2)).
//  * p4_family  — for m >= 1, n >= 3, ideals in k[x,y,z,u,v]: the
//                 three-generator ideal J0, its colon
//                 J = J0 : (x, z^{n+1}, u^2) in closed form, and the ideal
//                 I_C of the monomial curve (1, mn^2, mn(n+1), m(n+1)^2)
//                 in P^4.
//  * surface_ideal — the homogeneous prime of a monomial surface in P^5
//                 parametrized by five bivariate monomials, built by
//                 elimination and homogenization ("ex34"/"ex35" select the
//                 two pinned exponent sets).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/ideal.hpp"
#include "cmreg/io.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

namespace detail {

// x^a as a polynomial in variable index i.
template <class K>
Polynomial<K> var_power(const RingPtr& R, const MonomialOrder& ord, int i, unsigned a) {
    Monomial m = Monomial::one(R->nvars());
    m.set(i, a);
    return Polynomial<K>::term(R, ord, m, field_ops<K>::one(*R));
}

// c * x0^{e0} * x1^{e1} * ... as a polynomial (exponents padded with zeros).
template <class K>
Polynomial<K> monomial_poly(const RingPtr& R, const MonomialOrder& ord,
                            const std::vector<unsigned>& exps, long c = 1) {
    Monomial m = Monomial::one(R->nvars());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return Polynomial<K>::term(R, ord, m, field_ops<K>::from_long(*R, c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// example21
// ---------------------------------------------------------------------------

template <class K>
struct Example21Data {
    RingPtr ring;                      // k[x, y, z, t]
    MonomialOrder ord;
    Ideal<K> I;                        // (y^2 z - x^2 t, z^4 - x t^3)
    Ideal<K> J;                        // I : (z, t)
    Ideal<K> Kid;                      // I : (z, t)^2
    GradedComplex<K> j_complex;        // 0 -> R(-6)^2 -> F1 -> R, resolves R/J
    GradedComplex<K> k_complex;        // length 3, resolves R/Kid
    PolyMatrix<K> line_residual;       // 3x2; 2x2 minors = I + (t(xz^3 - y^2t^2))
    PolyMatrix<K> triple_residual;     // 3x2 as displayed; 2x2 minors = J
};

template <class K>
Example21Data<K> example21(long characteristic = 0) {
    RingPtr R = make_ring({"x", "y", "z", "t"}, characteristic);
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<K>(R, ord, s); };

    Ideal<K> I(R, ord, {P("y^2*z - x^2*t"), P("z^4 - x*t^3")});
    Ideal<K> J(R, ord, {P("y^2*z - x^2*t"), P("z^4 - x*t^3"), P("x*y^2*t^2 - x^2*z^3")});
    Ideal<K> Kid(R, ord, {P("y^2*z - x^2*t"), P("z^4 - x*t^3"), P("x^2*z^3 - x*y^2*t^2"),
                          P("x^4*z^2 - x*y^4*t")});

    // Complex of R/J: row of generators, then the 3x2 syzygy matrix (first
    // row sign-corrected so the composition vanishes; the minors are the
    // same ideal either way).
    GradedComplex<K> CJ;
    CJ.ctx = R;
    CJ.ord = ord;
    CJ.twists = {{0}, {3, 4, 5}, {6, 6}};
    {
        PolyMatrix<K> g = PolyMatrix<K>::zero(R, ord, 1, 3);
        g.e[0][0] = P("y^2*z - x^2*t");
        g.e[0][1] = P("z^4 - x*t^3");
        g.e[0][2] = P("x*y^2*t^2 - x^2*z^3");
        PolyMatrix<K> eta = PolyMatrix<K>::zero(R, ord, 3, 2);
        const char* rows[3][2] = {{"-x*t^2", "-z^3"}, {"x^2", "y^2"}, {"z", "t"}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 2; ++c) eta.e[r][c] = P(rows[r][c]);
        CJ.maps = {g, eta};
    }

    // Complex of R/Kid: generators in ascending degree, then psi (4x4) and
    // phi (4x1), all composing to zero as written.
    GradedComplex<K> CK;
    CK.ctx = R;
    CK.ord = ord;
    CK.twists = {{0}, {3, 4, 5, 6}, {6, 6, 7, 7}, {8}};
    {
        PolyMatrix<K> g = PolyMatrix<K>::zero(R, ord, 1, 4);
        g.e[0][0] = P("y^2*z - x^2*t");
        g.e[0][1] = P("z^4 - x*t^3");
        g.e[0][2] = P("x^2*z^3 - x*y^2*t^2");
        g.e[0][3] = P("x^4*z^2 - x*y^4*t");
        PolyMatrix<K> psi = PolyMatrix<K>::zero(R, ord, 4, 4);
        const char* psi_rows[4][4] = {{"x*t^2", "-z^3", "x*y^2*t", "-x^2*z^2"},
                                      {"-x^2", "y^2", "0", "0"},
                                      {"z", "-t", "-x^2", "y^2"},
                                      {"0", "0", "z", "-t"}};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) psi.e[r][c] = P(psi_rows[r][c]);
        PolyMatrix<K> phi = PolyMatrix<K>::zero(R, ord, 4, 1);
        phi.e[0][0] = P("-y^2");
        phi.e[1][0] = P("-x^2");
        phi.e[2][0] = P("t");
        phi.e[3][0] = P("z");
        CK.maps = {g, psi, phi};
    }

    // Residual matrices: the curve I links two residual curves inside the
    // complete intersection; each is cut out by the 2x2 minors of a 3x2
    // matrix (kept verbatim as displayed).
    PolyMatrix<K> A = PolyMatrix<K>::zero(R, ord, 3, 2);
    {
        const char* rows[3][2] = {{"z^3", "t^3"}, {"y^2", "x*t"}, {"x", "z"}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 2; ++c) A.e[r][c] = P(rows[r][c]);
    }
    PolyMatrix<K> B = PolyMatrix<K>::zero(R, ord, 3, 2);
    {
        const char* rows[3][2] = {{"x*t^2", "z^3"}, {"x^2", "y^2"}, {"z", "t"}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 2; ++c) B.e[r][c] = P(rows[r][c]);
    }

    return Example21Data<K>{R, ord, I, J, Kid, CJ, CK, A, B};
}

// ---------------------------------------------------------------------------
// example22
// ---------------------------------------------------------------------------

template <class K>
struct Example22Data {
    RingPtr ring;                 // k[x, y, z, t]
    MonomialOrder ord;
    Ideal<K> b;                   // ideal of the monomial curve (1, 6, 8)
    GradedComplex<K> b_complex;   // 0 -> R(-7)+R(-8) -> F2 -> F1 -> R
};

template <class K>
Example22Data<K> example22(long characteristic = 0) {
    RingPtr R = make_ring({"x", "y", "z", "t"}, characteristic);
    MonomialOrder ord = MonomialOrder::grevlex();
    auto P = [&](const char* s) { return parse_polynomial<K>(R, ord, s); };

    // Frozen signed generator row: the unique signing/ordering of the five
    // minimal generators (degrees 3,4,4,5,6) that annihilates psi below.
    std::vector<Polynomial<K>> gens = {P("x^2*t - y^2*z"), P("y^2*t^2 - x*z^3"),
                                       P("z^4 - x*t^3"), P("x^3*z^2 - y^4*t"),
                                       P("y^6 - x^5*z")};
    Ideal<K> b(R, ord, gens);

    GradedComplex<K> C;
    C.ctx = R;
    C.ord = ord;
    C.twists = {{0}, {3, 4, 4, 5, 6}, {5, 6, 6, 6, 7, 7}, {7, 8}};
    PolyMatrix<K> g = PolyMatrix<K>::zero(R, ord, 1, 5);
    for (int c = 0; c < 5; ++c) g.e[0][c] = gens[static_cast<std::size_t>(c)];
    PolyMatrix<K> psi = PolyMatrix<K>::zero(R, ord, 5, 6);
    const char* psi_rows[5][6] = {{"t^2", "-y^2*t", "x*z^2", "z^3", "y^4", "x^3*z"},
                                  {"z", "x^2", "-y^2", "x*t", "0", "0"},
                                  {"x", "0", "0", "y^2", "0", "0"},
                                  {"0", "z", "-t", "0", "x^2", "y^2"},
                                  {"0", "0", "0", "0", "z", "t"}};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 6; ++c) psi.e[r][c] = P(psi_rows[r][c]);
    PolyMatrix<K> phi = PolyMatrix<K>::zero(R, ord, 6, 2);
    const char* phi_rows[6][2] = {{"y^2", "0"}, {"t", "y^2"}, {"z", "x^2"},
                                  {"-x", "0"},  {"0", "t"},   {"0", "-z"}};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 2; ++c) phi.e[r][c] = P(phi_rows[r][c]);
    C.maps = {g, psi, phi};

    return Example22Data<K>{R, ord, b, C};
}

// ---------------------------------------------------------------------------
// cm_family
// ---------------------------------------------------------------------------

template <class K>
struct CMFamilyData {
    RingPtr ring;                 // k[x, y, z, t]
    MonomialOrder ord;
    long m = 0, n = 0;
    Ideal<K> I;                   // (x^m t - y^m z, z^{n+2} - x t^{n+1})
    Ideal<K> image;               // a = (y^m z - x^m t, f_0, ..., f_n)
    GradedComplex<K> complex;     // explicit complex with augmentation row a
    std::vector<long> curve_degrees;  // (1, m(n+1), m(n+2)): a = I_C ∩ (x,z) ∩ (z,t)
    int expected_reg_I = 0;           // m + n + 2
    int expected_reg_image = 0;       // m n + 2
    long expected_deg_image = 0;      // m (n + 2) + 2
    Polynomial<K> minor_witness_a;    // z^n (z^{n+2} - x t^{n+1}) in I_{n+1}(psi)
    Polynomial<K> minor_witness_b;    // t^{n-1} (x^m t - z y^m)   in I_{n+1}(psi)
};

template <class K>
CMFamilyData<K> cm_family(long m, long n, long characteristic = 0) {
    if (m < 1 || n < 1) throw std::invalid_argument("cm_family: parameters must be >= 1");
    RingPtr R = make_ring({"x", "y", "z", "t"}, characteristic);
    MonomialOrder ord = MonomialOrder::grevlex();
    const int X = 0, Y = 1, Z = 2, T = 3;
    auto vp = [&](int i, long a) {
        return detail::var_power<K>(R, ord, i, static_cast<unsigned>(a));
    };

    Polynomial<K> g0 = vp(Y, m) * vp(Z, 1) - vp(X, m) * vp(T, 1);  // y^m z - x^m t
    Ideal<K> I(R, ord, {vp(X, m) * vp(T, 1) - vp(Y, m) * vp(Z, 1),
                        vp(Z, n + 2) - vp(X, 1) * vp(T, n + 1)});

    // f_i = x^{im} z^{n+2-i} - x y^{im} t^{n-i+1},  i = 0..n
    std::vector<Polynomial<K>> f;
    for (long i = 0; i <= n; ++i)
        f.push_back(vp(X, i * m) * vp(Z, n + 2 - i) - vp(X, 1) * vp(Y, i * m) * vp(T, n - i + 1));

    std::vector<Polynomial<K>> agens = {g0};
    for (auto& fi : f) agens.push_back(fi);
    Ideal<K> image(R, ord, agens);

    GradedComplex<K> C;
    C.ctx = R;
    C.ord = ord;
    std::vector<int> t1 = {static_cast<int>(m + 1)};
    for (long i = 0; i <= n; ++i) t1.push_back(static_cast<int>(m * i + n - i + 2));
    std::vector<int> t2;
    for (long i = 1; i <= n; ++i) {
        t2.push_back(static_cast<int>(m * i + n - i + 3));
        t2.push_back(static_cast<int>(m * i + n - i + 3));
    }
    std::vector<int> t3;
    for (long i = 2; i <= n; ++i) t3.push_back(static_cast<int>(m * i + n - i + 4));
    C.twists = {{0}, t1, t2};
    if (!t3.empty()) C.twists.push_back(t3);

    const int F1 = static_cast<int>(t1.size());  // n + 2
    const int F2 = static_cast<int>(t2.size());  // 2n
    PolyMatrix<K> gamma = PolyMatrix<K>::zero(R, ord, 1, F1);
    for (int c = 0; c < F1; ++c) gamma.e[0][static_cast<std::size_t>(c)] = agens[static_cast<std::size_t>(c)];

    PolyMatrix<K> psi = PolyMatrix<K>::zero(R, ord, F1, F2);
    for (long i = 1; i <= n; ++i) {
        const int c0 = static_cast<int>(2 * (i - 1));  // first column of block i
        // row 0 (the g0 row): B_i = (x y^{(i-1)m} t^{n-i+1}, -x^{(i-1)m} z^{n+2-i})
        psi.e[0][static_cast<std::size_t>(c0)] = vp(X, 1) * vp(Y, (i - 1) * m) * vp(T, n - i + 1);
        psi.e[0][static_cast<std::size_t>(c0 + 1)] = -(vp(X, (i - 1) * m) * vp(Z, n + 2 - i));
        // f-row i-1 (row index i): (-x^m, y^m)
        psi.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(c0)] = -vp(X, m);
        psi.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(c0 + 1)] = vp(Y, m);
        // f-row i (row index i+1): (z, -t)
        psi.e[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c0)] = vp(Z, 1);
        psi.e[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c0 + 1)] = -vp(T, 1);
    }
    C.maps = {gamma, psi};

    if (!t3.empty()) {
        PolyMatrix<K> phi = PolyMatrix<K>::zero(R, ord, F2, static_cast<int>(t3.size()));
        for (long i = 2; i <= n; ++i) {
            const int col = static_cast<int>(i - 2);
            const int rA = static_cast<int>(2 * (i - 2));  // block-row i-1
            const int rB = static_cast<int>(2 * (i - 1));  // block-row i
            phi.e[static_cast<std::size_t>(rA)][static_cast<std::size_t>(col)] = -vp(Y, m);
            phi.e[static_cast<std::size_t>(rA + 1)][static_cast<std::size_t>(col)] = -vp(X, m);
            phi.e[static_cast<std::size_t>(rB)][static_cast<std::size_t>(col)] = vp(T, 1);
            phi.e[static_cast<std::size_t>(rB + 1)][static_cast<std::size_t>(col)] = vp(Z, 1);
        }
        C.maps.push_back(phi);
    }

    Polynomial<K> wa = vp(Z, n) * (vp(Z, n + 2) - vp(X, 1) * vp(T, n + 1));
    Polynomial<K> wb = vp(T, n - 1) * (vp(X, m) * vp(T, 1) - vp(Z, 1) * vp(Y, m));

    return CMFamilyData<K>{R,
                           ord,
                           m,
                           n,
                           I,
                           image,
                           C,
                           {1, m * (n + 1), m * (n + 2)},
                           static_cast<int>(m + n + 2),
                           static_cast<int>(m * n + 2),
                           m * (n + 2) + 2,
                           wa,
                           wb};
}

// ---------------------------------------------------------------------------
// p4_family
// ---------------------------------------------------------------------------

template <class K>
struct P4FamilyData {
    RingPtr ring;                 // k[x, y, z, u, v]
    MonomialOrder ord;
    long m = 0, n = 0;
    Ideal<K> J0;                  // (y^m u^2 - x^m z v, z^{n+1} - x u^n, u^{n+1} - x v^n)
    Ideal<K> colon_by;            // (x, z^{n+1}, u^2)
    Ideal<K> J;                   // J0 : colon_by, in closed form (J0 + one generator)
    Ideal<K> IC;                  // ideal of the monomial curve (1, mn^2, mn(n+1), m(n+1)^2)
    Ideal<K> L;                   // (z, u, v)
    Polynomial<K> M1;             // y^{mn^2} - x^{mn^2-1} z              (in IC)
    Polynomial<K> M2;             // y^{m(n^2-2n-1)} v - x^{m(n^2-2n-1)-1} z^2  (in IC)
    std::vector<long> curve_degrees;
    int expected_reg_J = 0;           // m + 2n + 1
    long expected_mu = 0;             // 2 n (n + 1)
    long expected_deg_J = 0;          // (m+2)(n+1)^2 - 2(n+1)
    int expected_reg_IC = 0;          // m n^2
    int expected_reg_radical_J = 0;   // m (n^2 - 2n - 1) + 1
};

template <class K>
P4FamilyData<K> p4_family(long m, long n, long characteristic = 0) {
    if (m < 1 || n < 3) throw std::invalid_argument("p4_family: needs m >= 1 and n >= 3");
    RingPtr R = make_ring({"x", "y", "z", "u", "v"}, characteristic);
    MonomialOrder ord = MonomialOrder::grevlex();
    const int X = 0, Y = 1, Z = 2, U = 3, V = 4;
    auto vp = [&](int i, long a) {
        return detail::var_power<K>(R, ord, i, static_cast<unsigned>(a));
    };

    Polynomial<K> q1 = vp(Y, m) * vp(U, 2) - vp(X, m) * vp(Z, 1) * vp(V, 1);
    Polynomial<K> q2 = vp(Z, n + 1) - vp(X, 1) * vp(U, n);
    Polynomial<K> q3 = vp(U, n + 1) - vp(X, 1) * vp(V, n);
    Ideal<K> J0(R, ord, {q1, q2, q3});

    Ideal<K> colon_by(R, ord, {vp(X, 1), vp(Z, n + 1), vp(U, 2)});

    Polynomial<K> extra = vp(Y, m) * vp(V, n) - vp(X, m - 1) * vp(Z, 1) * vp(U, n - 1) * vp(V, 1);
    Ideal<K> J(R, ord, {q1, q2, q3, extra});

    std::vector<long> cd = {1, m * n * n, m * n * (n + 1), m * (n + 1) * (n + 1)};
    Ideal<K> IC = monomial_curve_ideal<K>(cd, {"x", "y", "z", "u", "v"}, characteristic, ord);

    Ideal<K> L(R, ord, {vp(Z, 1), vp(U, 1), vp(V, 1)});

    const long e1 = m * n * n;
    const long e2 = m * (n * n - 2 * n - 1);
    Polynomial<K> M1 = vp(Y, e1) - vp(X, e1 - 1) * vp(Z, 1);
    Polynomial<K> M2 = vp(Y, e2) * vp(V, 1) - vp(X, e2 - 1) * vp(Z, 2);

    return P4FamilyData<K>{R,
                           ord,
                           m,
                           n,
                           J0,
                           colon_by,
                           J,
                           IC,
                           L,
                           M1,
                           M2,
                           cd,
                           static_cast<int>(m + 2 * n + 1),
                           2 * n * (n + 1),
                           (m + 2) * (n + 1) * (n + 1) - 2 * (n + 1),
                           static_cast<int>(m * n * n),
                           static_cast<int>(m * (n * n - 2 * n - 1) + 1)};
}

// ---------------------------------------------------------------------------
// surface_ideal
// ---------------------------------------------------------------------------

// The five parametrizing exponent pairs (a^p b^q) of the two pinned monomial
// surfaces in P^5.
inline std::vector<std::array<unsigned, 2>> surface_exponents(const std::string& which) {
    if (which == "ex34") return {{5, 0}, {0, 6}, {4, 1}, {1, 2}, {2, 5}};
    if (which == "ex35") return {{12, 0}, {0, 8}, {1, 7}, {5, 1}, {9, 4}};
    throw std::invalid_argument("surface_ideal: unknown surface name " + which);
}

template <class K>
struct SurfaceData {
    RingPtr ring;   // k[x0, ..., x5], homogenizing variable first
    MonomialOrder ord;
    Ideal<K> P;     // homogeneous prime of the parametrized surface
    std::vector<std::array<unsigned, 2>> exponents;
};

// Kernel of k[x1..x5] -> k[a,b], x_i |-> a^{p_i} b^{q_i}, then the projective
// closure via a homogenizing variable x0 (placed first in the final ring).
template <class K>
SurfaceData<K> surface_ideal(const std::string& which, long characteristic) {
    if (characteristic != 0 && characteristic != 101)
        throw std::invalid_argument("surface_ideal: characteristic must be 0 or 101");
    auto exps = surface_exponents(which);

    RingPtr big = make_ring({"a", "b", "x1", "x2", "x3", "x4", "x5"}, characteristic);
    MonomialOrder bord = MonomialOrder::block_elim(2);
    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        Monomial mono = Monomial::one(big->nvars());
        mono.set(0, exps[i][0]);
        mono.set(1, exps[i][1]);
        gens.push_back(Polynomial<K>::variable(big, bord, static_cast<int>(2 + i)) -
                       Polynomial<K>::term(big, bord, mono, field_ops<K>::one(*big)));
    }
    Ideal<K> param(big, bord, std::move(gens));
    Ideal<K> affine = eliminate(param, {"a", "b"});       // in k[x1..x5]
    Ideal<K> closed = homogenize(affine, "x0");           // in k[x1..x5, x0]

    RingPtr R = make_ring({"x0", "x1", "x2", "x3", "x4", "x5"}, characteristic);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<int> perm = {1, 2, 3, 4, 5, 0};
    std::vector<Polynomial<K>> out;
    for (const auto& g : closed.generators()) out.push_back(g.map_vars(R, ord, perm));
    return SurfaceData<K>{R, ord, Ideal<K>(R, ord, std::move(out)), exps};
}

}  // namespace cmreg
