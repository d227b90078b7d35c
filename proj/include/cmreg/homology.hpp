#pragma once

// Presented graded modules and the derived-functor layer built on them:
// Ext^q of a cyclic module against a twisted free module, torsion submodules
// H^0_a, socles, and graded local-cohomology dimensions via duality.

#include <gmpxx.h>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmreg/hilbert.hpp"
#include "cmreg/ideal.hpp"
#include "cmreg/module.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

// A graded module given by finitely many generators and relations:
// M = F0 / im(relations) with F0 = (+)_r R(-twists[r]).  Relation columns are
// homogeneous with respect to the twist rule (entry degree = column degree -
// row twist).
template <class K>
class PresentedModule {
public:
    PresentedModule(RingPtr ctx, MonomialOrder ord, std::vector<int> twists,
                    PolyMatrix<K> relations)
        : ctx_(std::move(ctx)), ord_(std::move(ord)), twists_(std::move(twists)) {
        if (relations.nrows != static_cast<int>(twists_.size()))
            throw std::invalid_argument("presented module: relation rows vs twists mismatch");
        // Keep only nonzero relation columns and check each is homogeneous.
        relations_ = PolyMatrix<K>::zero(ctx_, ord_, static_cast<int>(twists_.size()), 0);
        for (int c = 0; c < relations.ncols; ++c) {
            bool nonzero = false;
            int col_deg = 0;
            bool have_deg = false;
            for (int r = 0; r < relations.nrows; ++r) {
                const Polynomial<K>& p =
                    relations.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (p.is_zero()) continue;
                nonzero = true;
                if (!p.is_homogeneous())
                    throw std::invalid_argument("presented module: inhomogeneous relation");
                int d = static_cast<int>(p.degree()) + twists_[static_cast<std::size_t>(r)];
                if (have_deg && d != col_deg)
                    throw std::invalid_argument("presented module: relation degree conflict");
                col_deg = d;
                have_deg = true;
            }
            if (!nonzero) continue;
            for (int r = 0; r < relations.nrows; ++r)
                relations_.e[static_cast<std::size_t>(r)].push_back(
                    relations.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            ++relations_.ncols;
        }
    }

    static PresentedModule zero(RingPtr ctx, MonomialOrder ord) {
        return PresentedModule(std::move(ctx), std::move(ord), {}, PolyMatrix<K>{});
    }

    // F0 itself, with no relations.
    static PresentedModule free_module(RingPtr ctx, MonomialOrder ord, std::vector<int> twists) {
        PolyMatrix<K> none = PolyMatrix<K>::zero(ctx, ord, static_cast<int>(twists.size()), 0);
        return PresentedModule(std::move(ctx), std::move(ord), std::move(twists),
                               std::move(none));
    }

    const RingPtr& ctx() const { return ctx_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<int>& twists() const { return twists_; }
    const PolyMatrix<K>& relations() const { return relations_; }
    int ngens() const { return static_cast<int>(twists_.size()); }

    std::vector<std::vector<Polynomial<K>>> relation_columns() const {
        std::vector<std::vector<Polynomial<K>>> cols;
        cols.reserve(static_cast<std::size_t>(relations_.ncols));
        for (int c = 0; c < relations_.ncols; ++c) cols.push_back(relations_.column(c));
        return cols;
    }

    const ModuleGB<K>& relations_gb() const {
        if (!rel_gb_)
            rel_gb_ = std::make_shared<ModuleGB<K>>(
                submodule_gb<K>(ctx_, ord_, relation_columns(), ngens()));
        return *rel_gb_;
    }

    // M = 0 iff every generator lies in the relation submodule.
    bool is_zero() const {
        if (twists_.empty()) return true;
        ModOrderPtr mord = relations_gb().order();
        for (int r = 0; r < ngens(); ++r) {
            ModPoly<K> unit = ModPoly<K>::embed(
                Polynomial<K>::constant(ctx_, ord_, field_ops<K>::one(*ctx_)), mord, ngens(), r);
            if (!relations_gb().contains(unit)) return false;
        }
        return true;
    }

    // dim_k M_d = dim (F0)_d - dim U_d.
    mpz_class graded_dimension(int d) const {
        int n = ctx_->nvars();
        mpz_class s = 0;
        for (int a : twists_) s += detail::binom(d - a + n - 1, n - 1);
        if (relations_.ncols > 0) s -= submodule_graded_dimension<K>(relations_gb(), twists_, d);
        return s;
    }

private:
    RingPtr ctx_;
    MonomialOrder ord_ = MonomialOrder::grevlex();
    std::vector<int> twists_;
    PolyMatrix<K> relations_;
    mutable std::shared_ptr<ModuleGB<K>> rel_gb_;
};

// R/I as a presented module: one generator in degree 0, relations = gens of I.
template <class K>
PresentedModule<K> quotient_module(const Ideal<K>& I) {
    PolyMatrix<K> rel = PolyMatrix<K>::zero(I.ctx(), I.order(), 1,
                                            static_cast<int>(I.generators().size()));
    for (std::size_t c = 0; c < I.generators().size(); ++c)
        rel.e[0][c] = I.generators()[c];
    return PresentedModule<K>(I.ctx(), I.order(), {0}, std::move(rel));
}

template <class K>
PolyMatrix<K> transpose(const PolyMatrix<K>& M, const RingPtr& ctx, const MonomialOrder& ord) {
    PolyMatrix<K> T = PolyMatrix<K>::zero(ctx, ord, M.ncols, M.nrows);
    for (int r = 0; r < M.nrows; ++r)
        for (int c = 0; c < M.ncols; ++c)
            T.e[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return T;
}

// Minimal free resolution of a presented module.
template <class K>
GradedComplex<K> resolve_module(const PresentedModule<K>& M) {
    return resolve_presented<K>(M.ctx(), M.order(), M.twists(), M.relation_columns());
}

template <class K>
BettiTable module_betti(const PresentedModule<K>& M) {
    return betti_table(resolve_module(M));
}

// reg(M) = max over the minimal resolution of (generator degree - level).
template <class K>
int module_regularity(const PresentedModule<K>& M) {
    if (M.is_zero()) throw std::invalid_argument("regularity of the zero module");
    return regularity_of_complex(resolve_module(M));
}

// Numerator of the Hilbert series of M against a power-shift: with return
// value (num, s), HilbertSeries(M) = t^{-s} * num(t) / (1-t)^n.  The shift
// absorbs generators in negative degrees.
template <class K>
std::pair<ZPoly, int> module_series_numerator(const PresentedModule<K>& M) {
    if (M.ngens() == 0) return {ZPoly{}, 0};
    int shift = 0;
    for (int a : M.twists()) shift = std::max(shift, -a);
    int n = M.ctx()->nvars();
    ZPoly num;
    const ModuleGB<K>& gb = M.relations_gb();
    for (int r = 0; r < M.ngens(); ++r) {
        std::vector<Monomial> lt;
        for (const auto& v : gb.elements())
            if (!v.is_zero() && v.leading_term().comp == r) lt.push_back(v.leading_term().m);
        ZPoly nr = hilbert_numerator_monomial(n, std::move(lt));
        num = num + nr.shifted(M.twists()[static_cast<std::size_t>(r)] + shift);
    }
    return {std::move(num), shift};
}

namespace detail {

// Degree of a homogeneous column with respect to row twists; throws on a
// degree conflict, returns false for the zero column.
template <class K>
bool column_degree(const std::vector<Polynomial<K>>& col, const std::vector<int>& twists,
                   int* deg_out) {
    bool have = false;
    int deg = 0;
    for (std::size_t r = 0; r < col.size(); ++r) {
        if (col[r].is_zero()) continue;
        if (!col[r].is_homogeneous())
            throw std::logic_error("inhomogeneous column in a graded computation");
        int d = static_cast<int>(col[r].degree()) + twists[r];
        if (have && d != deg) throw std::logic_error("column degree conflict");
        deg = d;
        have = true;
    }
    if (have && deg_out) *deg_out = deg;
    return have;
}

// Presents span(gen_cols) / span(mod_cols) inside a free module with the
// given twists: generators are the gen_cols, relations are all column vectors
// x with gen_cols * x in span(mod_cols).
template <class K>
PresentedModule<K> present_subquotient(const RingPtr& ctx, const MonomialOrder& ord,
                                       const std::vector<int>& ambient_twists,
                                       const std::vector<std::vector<Polynomial<K>>>& gen_cols,
                                       const std::vector<std::vector<Polynomial<K>>>& mod_cols) {
    int ncomp = static_cast<int>(ambient_twists.size());
    int s = static_cast<int>(gen_cols.size());
    std::vector<int> gtw;
    gtw.reserve(static_cast<std::size_t>(s));
    for (const auto& col : gen_cols) {
        int d = 0;
        if (!column_degree<K>(col, ambient_twists, &d))
            throw std::logic_error("zero generator in a subquotient presentation");
        gtw.push_back(d);
    }
    PolyMatrix<K> big = PolyMatrix<K>::zero(ctx, ord, ncomp,
                                            s + static_cast<int>(mod_cols.size()));
    for (int c = 0; c < s; ++c)
        for (int r = 0; r < ncomp; ++r)
            big.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                gen_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < mod_cols.size(); ++c)
        for (int r = 0; r < ncomp; ++r)
            big.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(s) + c] =
                mod_cols[c][static_cast<std::size_t>(r)];
    auto ker = kernel_of_matrix<K>(ctx, ord, big);
    PolyMatrix<K> rel = PolyMatrix<K>::zero(ctx, ord, s, static_cast<int>(ker.size()));
    for (std::size_t c = 0; c < ker.size(); ++c)
        for (int r = 0; r < s; ++r)
            rel.e[static_cast<std::size_t>(r)][c] = ker[c][static_cast<std::size_t>(r)];
    return PresentedModule<K>(ctx, ord, std::move(gtw), std::move(rel));
}

}  // namespace detail

// Ext^q(R/I, R(twist)), presented with correct twists: the homology at
// position q of the dual of the minimal free resolution of R/I, where dualizing
// F_k = (+)_j R(-a_j) against R(twist) yields (+)_j R(-(-twist - a_j)) and the
// transposed matrices.
template <class K>
PresentedModule<K> ext_cyclic(const Ideal<K>& I, int q, int twist) {
    const RingPtr& R = I.ctx();
    const MonomialOrder& ord = I.order();
    int n = R->nvars();
    if (q < 0 || q > n) throw std::invalid_argument("ext_cyclic: homological index out of range");
    GradedComplex<K> res = resolve_quotient<K>(R, ord, I.generators());
    int p = res.length();
    if (q > p) return PresentedModule<K>::zero(R, ord);

    std::vector<int> dual_q(static_cast<std::size_t>(res.rank(q)));
    for (int j = 0; j < res.rank(q); ++j)
        dual_q[static_cast<std::size_t>(j)] =
            -twist - res.twists[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];

    // Kernel of the outgoing dual map (all of the dual free module at the top).
    std::vector<std::vector<Polynomial<K>>> kgens;
    if (q < p) {
        PolyMatrix<K> delta = transpose(res.maps[static_cast<std::size_t>(q)], R, ord);
        kgens = kernel_of_matrix<K>(R, ord, delta);
    } else {
        for (int j = 0; j < res.rank(q); ++j) {
            std::vector<Polynomial<K>> col(static_cast<std::size_t>(res.rank(q)),
                                           Polynomial<K>::zero(R, ord));
            col[static_cast<std::size_t>(j)] =
                Polynomial<K>::constant(R, ord, field_ops<K>::one(*R));
            kgens.push_back(std::move(col));
        }
    }
    if (kgens.empty()) return PresentedModule<K>::zero(R, ord);

    // Image of the incoming dual map.
    std::vector<std::vector<Polynomial<K>>> img;
    if (q >= 1) {
        PolyMatrix<K> eps = transpose(res.maps[static_cast<std::size_t>(q - 1)], R, ord);
        for (int c = 0; c < eps.ncols; ++c) img.push_back(eps.column(c));
    }
    return detail::present_subquotient<K>(R, ord, dual_q, kgens, img);
}

namespace detail {

// Generators of (U : a) = {v : g*v in U for every generator g of a}.
template <class K>
std::vector<std::vector<Polynomial<K>>> submodule_colon_ideal(
    const RingPtr& ctx, const MonomialOrder& ord,
    const std::vector<std::vector<Polynomial<K>>>& u_cols, int ncomp, const Ideal<K>& a) {
    std::vector<std::vector<Polynomial<K>>> acc;
    bool first = true;
    for (const auto& g : a.generators()) {
        auto part = submodule_colon_element<K>(ctx, ord, u_cols, ncomp, g);
        if (first) {
            acc = std::move(part);
            first = false;
        } else {
            acc = submodule_intersect<K>(ctx, ord, acc, part, ncomp);
        }
        if (acc.empty()) break;
    }
    if (first) throw std::invalid_argument("colon by the zero ideal");
    return acc;
}

}  // namespace detail

// H^0_a(M) = (0 :_M a^infty) and the quotient M / H^0_a(M), computed as the
// stabilization of U : a^k over the relation submodule U.
template <class K>
std::pair<PresentedModule<K>, PresentedModule<K>> torsion_submodule(const PresentedModule<K>& M,
                                                                    const Ideal<K>& a) {
    if (a.is_zero()) throw std::invalid_argument("torsion with respect to the zero ideal");
    const RingPtr& R = M.ctx();
    const MonomialOrder& ord = M.order();
    int ncomp = M.ngens();
    if (ncomp == 0)
        return {PresentedModule<K>::zero(R, ord), PresentedModule<K>::zero(R, ord)};

    std::vector<std::vector<Polynomial<K>>> w = M.relation_columns();
    ModuleGB<K> wgb = submodule_gb<K>(R, ord, w, ncomp);
    const int max_rounds = 200;
    for (int round = 0;; ++round) {
        if (round >= max_rounds)
            throw std::logic_error("torsion submodule failed to stabilize");
        auto next = detail::submodule_colon_ideal<K>(R, ord, w, ncomp, a);
        ModuleGB<K> ngb = submodule_gb<K>(R, ord, next, ncomp);
        if (ngb == wgb) break;
        w = std::move(next);
        wgb = std::move(ngb);
    }

    // Use the reduced module GB of W as its canonical generating set.
    std::vector<std::vector<Polynomial<K>>> w_cols;
    for (const auto& v : wgb.elements()) w_cols.push_back(v.to_column(ord));

    PresentedModule<K> h0 =
        w_cols.empty()
            ? PresentedModule<K>::zero(R, ord)
            : detail::present_subquotient<K>(R, ord, M.twists(), w_cols, M.relation_columns());
    PolyMatrix<K> wmat = PolyMatrix<K>::zero(R, ord, ncomp, static_cast<int>(w_cols.size()));
    for (std::size_t c = 0; c < w_cols.size(); ++c)
        for (int r = 0; r < ncomp; ++r)
            wmat.e[static_cast<std::size_t>(r)][c] = w_cols[c][static_cast<std::size_t>(r)];
    PresentedModule<K> quot(R, ord, M.twists(), std::move(wmat));
    return {std::move(h0), std::move(quot)};
}

// Graded dimensions of the socle (0 :_M m), m the irrelevant maximal ideal,
// as a sorted multiset of degrees.  The socle is the kernel of the diagonal
// multiplication map M -> M^(#vars), i.e. (U : m)/U over the relations U.
template <class K>
std::vector<int> socle_degrees(const PresentedModule<K>& M) {
    const RingPtr& R = M.ctx();
    const MonomialOrder& ord = M.order();
    int ncomp = M.ngens();
    if (ncomp == 0) return {};
    std::vector<Polynomial<K>> vars;
    for (int i = 0; i < R->nvars(); ++i) vars.push_back(Polynomial<K>::variable(R, ord, i));
    Ideal<K> mm(R, ord, vars);
    auto w_cols =
        detail::submodule_colon_ideal<K>(R, ord, M.relation_columns(), ncomp, mm);
    if (w_cols.empty()) return {};
    ModuleGB<K> wgb = submodule_gb<K>(R, ord, w_cols, ncomp);

    // m kills W/U, so W/U is spanned by the images of the GB generators of W;
    // only their degrees can carry socle.
    std::vector<int> cand;
    for (const auto& v : wgb.elements()) {
        int d = 0;
        if (!v.is_homogeneous(M.twists(), &d))
            throw std::logic_error("inhomogeneous socle generator");
        cand.push_back(d);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<int> out;
    for (int d : cand) {
        mpz_class mult = submodule_graded_dimension<K>(wgb, M.twists(), d) -
                         (M.relations().ncols > 0
                              ? submodule_graded_dimension<K>(M.relations_gb(), M.twists(), d)
                              : mpz_class(0));
        for (mpz_class i = 0; i < mult; ++i) out.push_back(d);
    }
    return out;
}

// dim_k H^i_m(R/I)_alpha for alpha in [lo, hi], through graded local duality:
// dim H^i_m(M)_alpha = dim Ext^(n-i)(M, R(-n))_(-alpha).
template <class K>
std::vector<mpz_class> local_cohomology_dims(const Ideal<K>& I, int i, int lo, int hi) {
    int n = I.ctx()->nvars();
    if (i < 0 || i > n)
        throw std::invalid_argument("local_cohomology_dims: index out of range");
    if (lo > hi) return {};
    PresentedModule<K> E = ext_cyclic<K>(I, n - i, -n);
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int alpha = lo; alpha <= hi; ++alpha) out.push_back(E.graded_dimension(-alpha));
    return out;
}

}  // namespace cmreg
