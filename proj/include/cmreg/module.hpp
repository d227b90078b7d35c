#pragma once

// Free-module layer: terms with a component index, module monomial orders
// (position-over-term and Schreyer), module Groebner bases, and kernels of
// polynomial matrices via elimination.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmreg/order.hpp"
#include "cmreg/polynomial.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

template <class K>
struct ModTerm {
    Monomial m;
    int comp = 0;
    K c{};
};

// Order on terms (monomial, component) of a free module.  POT compares the
// component first with lower index winning; Schreyer compares images under a
// fixed generator list in the module one level down, breaking ties by lower
// component index.
class ModuleOrder {
public:
    static std::shared_ptr<const ModuleOrder> pot(MonomialOrder base) {
        auto o = std::make_shared<ModuleOrder>();
        o->kind_ = Kind::POT;
        o->base_ = base;
        return o;
    }

    static std::shared_ptr<const ModuleOrder> schreyer(std::shared_ptr<const ModuleOrder> below,
                                                       std::vector<Monomial> lt_mono,
                                                       std::vector<int> lt_comp) {
        if (lt_mono.size() != lt_comp.size())
            throw std::invalid_argument("schreyer: leading term lists differ in length");
        auto o = std::make_shared<ModuleOrder>();
        o->kind_ = Kind::Schreyer;
        o->base_ = below->base_;
        o->below_ = std::move(below);
        o->lt_mono_ = std::move(lt_mono);
        o->lt_comp_ = std::move(lt_comp);
        return o;
    }

    // +1 if (ma,ca) > (mb,cb), 0 if equal, -1 otherwise.
    int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
        if (kind_ == Kind::POT) {
            if (ca != cb) return ca < cb ? 1 : -1;
            return base_.cmp(ma, mb);
        }
        int c = below_->cmp(ma * lt_mono_[static_cast<std::size_t>(ca)],
                            lt_comp_[static_cast<std::size_t>(ca)],
                            mb * lt_mono_[static_cast<std::size_t>(cb)],
                            lt_comp_[static_cast<std::size_t>(cb)]);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }

    const MonomialOrder& base() const { return base_; }

private:
    enum class Kind { POT, Schreyer };
    Kind kind_ = Kind::POT;
    MonomialOrder base_ = MonomialOrder::grevlex();
    std::shared_ptr<const ModuleOrder> below_;
    std::vector<Monomial> lt_mono_;
    std::vector<int> lt_comp_;
};

using ModOrderPtr = std::shared_ptr<const ModuleOrder>;

// Element of a free module R^ncomp, stored as terms in strictly descending
// module order.
template <class K>
class ModPoly {
public:
    ModPoly() = default;

    static ModPoly zero(RingPtr ctx, ModOrderPtr ord, int ncomp) {
        ModPoly p;
        p.ctx_ = std::move(ctx);
        p.ord_ = std::move(ord);
        p.ncomp_ = ncomp;
        return p;
    }

    static ModPoly from_terms(RingPtr ctx, ModOrderPtr ord, int ncomp,
                              std::vector<ModTerm<K>> ts) {
        ModPoly p = zero(std::move(ctx), std::move(ord), ncomp);
        std::sort(ts.begin(), ts.end(), [&](const ModTerm<K>& a, const ModTerm<K>& b) {
            return p.ord_->cmp(a.m, a.comp, b.m, b.comp) > 0;
        });
        for (auto& t : ts) {
            if (t.comp < 0 || t.comp >= ncomp)
                throw std::invalid_argument("module term component out of range");
            if (field_ops<K>::is_zero(t.c)) continue;
            if (!p.t_.empty() && p.t_.back().m == t.m && p.t_.back().comp == t.comp) {
                p.t_.back().c = field_ops<K>::add(*p.ctx_, p.t_.back().c, t.c);
                if (field_ops<K>::is_zero(p.t_.back().c)) p.t_.pop_back();
            } else {
                p.t_.push_back(std::move(t));
            }
        }
        return p;
    }

    // Basis vector times a ring polynomial, placed in one component.
    static ModPoly embed(const Polynomial<K>& f, ModOrderPtr ord, int ncomp, int comp) {
        std::vector<ModTerm<K>> ts;
        ts.reserve(f.terms().size());
        for (const auto& t : f.terms()) ts.push_back({t.m, comp, t.c});
        return from_terms(f.ctx(), std::move(ord), ncomp, std::move(ts));
    }

    // Builds the element with the given component polynomials (column vector).
    static ModPoly from_column(const std::vector<Polynomial<K>>& col, ModOrderPtr ord) {
        if (col.empty()) throw std::invalid_argument("from_column: empty column");
        RingPtr ctx = col.front().ctx();
        std::vector<ModTerm<K>> ts;
        for (std::size_t r = 0; r < col.size(); ++r) {
            require_same_ring(*ctx, *col[r].ctx());
            for (const auto& t : col[r].terms())
                ts.push_back({t.m, static_cast<int>(r), t.c});
        }
        return from_terms(std::move(ctx), std::move(ord), static_cast<int>(col.size()),
                          std::move(ts));
    }

    const RingPtr& ctx() const { return ctx_; }
    const ModOrderPtr& order() const { return ord_; }
    int ncomp() const { return ncomp_; }
    const std::vector<ModTerm<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    const ModTerm<K>& leading_term() const {
        if (t_.empty()) throw std::logic_error("leading term of zero module element");
        return t_.front();
    }

    ModPoly tail() const {
        ModPoly p = zero(ctx_, ord_, ncomp_);
        if (t_.size() > 1) p.t_.assign(t_.begin() + 1, t_.end());
        return p;
    }

    // Extracts one component as a ring polynomial under the given ring order.
    Polynomial<K> component(int comp, const MonomialOrder& ring_ord) const {
        std::vector<Term<K>> ts;
        for (const auto& t : t_)
            if (t.comp == comp) ts.push_back({t.m, t.c});
        return Polynomial<K>::from_terms(ctx_, ring_ord, std::move(ts));
    }

    std::vector<Polynomial<K>> to_column(const MonomialOrder& ring_ord) const {
        std::vector<Polynomial<K>> col;
        col.reserve(static_cast<std::size_t>(ncomp_));
        for (int c = 0; c < ncomp_; ++c) col.push_back(component(c, ring_ord));
        return col;
    }

    ModPoly operator-() const {
        ModPoly p = *this;
        for (auto& t : p.t_) t.c = field_ops<K>::neg(*ctx_, t.c);
        return p;
    }

    ModPoly operator+(const ModPoly& o) const {
        check_compatible(o);
        ModPoly p = zero(ctx_, ord_, ncomp_);
        p.t_.reserve(t_.size() + o.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() && j < o.t_.size()) {
            int c = ord_->cmp(t_[i].m, t_[i].comp, o.t_[j].m, o.t_[j].comp);
            if (c > 0) {
                p.t_.push_back(t_[i++]);
            } else if (c < 0) {
                p.t_.push_back(o.t_[j++]);
            } else {
                K s = field_ops<K>::add(*ctx_, t_[i].c, o.t_[j].c);
                if (!field_ops<K>::is_zero(s)) p.t_.push_back({t_[i].m, t_[i].comp, s});
                ++i;
                ++j;
            }
        }
        while (i < t_.size()) p.t_.push_back(t_[i++]);
        while (j < o.t_.size()) p.t_.push_back(o.t_[j++]);
        return p;
    }

    ModPoly operator-(const ModPoly& o) const { return *this + (-o); }

    ModPoly scaled(const K& c) const {
        if (field_ops<K>::is_zero(c)) return zero(ctx_, ord_, ncomp_);
        ModPoly p = *this;
        for (auto& t : p.t_) t.c = field_ops<K>::mul(*ctx_, t.c, c);
        return p;
    }

    ModPoly times_term(const K& c, const Monomial& mono) const {
        if (field_ops<K>::is_zero(c)) return zero(ctx_, ord_, ncomp_);
        ModPoly p = *this;
        for (auto& t : p.t_) {
            t.m = t.m * mono;
            t.c = field_ops<K>::mul(*ctx_, t.c, c);
        }
        return p;
    }

    // this - c * mono * g, the division workhorse.
    ModPoly sub_mul(const K& c, const Monomial& mono, const ModPoly& g) const {
        check_compatible(g);
        return *this - g.times_term(c, mono);
    }

    ModPoly monic() const {
        if (t_.empty()) return *this;
        return scaled(field_ops<K>::inv(*ctx_, t_.front().c));
    }

    // Degree of a term measured with component twists; requires homogeneity
    // checks from the caller.
    bool is_homogeneous(const std::vector<int>& twists, int* deg_out = nullptr) const {
        if (t_.empty()) {
            if (deg_out) *deg_out = 0;
            return true;
        }
        int d0 = static_cast<int>(t_.front().m.deg()) +
                 twists[static_cast<std::size_t>(t_.front().comp)];
        for (const auto& t : t_) {
            int d = static_cast<int>(t.m.deg()) + twists[static_cast<std::size_t>(t.comp)];
            if (d != d0) return false;
        }
        if (deg_out) *deg_out = d0;
        return true;
    }

    bool operator==(const ModPoly& o) const {
        if (ncomp_ != o.ncomp_ || t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (t_[i].comp != o.t_[i].comp || !(t_[i].m == o.t_[i].m) ||
                t_[i].c != o.t_[i].c)
                return false;
        }
        return true;
    }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }

    static bool canonical_less(const ModPoly& a, const ModPoly& b) {
        std::size_t m = std::min(a.t_.size(), b.t_.size());
        for (std::size_t i = 0; i < m; ++i) {
            int c = a.ord_->cmp(a.t_[i].m, a.t_[i].comp, b.t_[i].m, b.t_[i].comp);
            if (c != 0) return c > 0;
            std::string ca = field_ops<K>::to_string(a.t_[i].c);
            std::string cb = field_ops<K>::to_string(b.t_[i].c);
            if (ca != cb) return ca < cb;
        }
        return a.t_.size() < b.t_.size();
    }

private:
    void check_compatible(const ModPoly& o) const {
        require_same_ring(*ctx_, *o.ctx_);
        if (ncomp_ != o.ncomp_)
            throw std::invalid_argument("module elements live in different free modules");
        if (ord_ != o.ord_)
            throw std::invalid_argument("module elements carry different orders");
    }

    RingPtr ctx_;
    ModOrderPtr ord_;
    int ncomp_ = 0;
    std::vector<ModTerm<K>> t_;
};

// Division of f by gens: subtracts reducible leading terms, moves irreducible
// ones to the remainder.  Returns the remainder.
template <class K>
ModPoly<K> normal_form(const ModPoly<K>& f, const std::vector<ModPoly<K>>& gens) {
    const RingContext& R = *f.ctx();
    ModPoly<K> h = f;
    std::vector<ModTerm<K>> rem;
    while (!h.is_zero()) {
        const ModTerm<K>& lt = h.leading_term();
        bool reduced = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            const ModTerm<K>& gl = g.leading_term();
            if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
                K c = field_ops<K>::div(R, lt.c, gl.c);
                h = h.sub_mul(c, lt.m.divided_by(gl.m), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            h = h.tail();
        }
    }
    return ModPoly<K>::from_terms(f.ctx(), f.order(), f.ncomp(), std::move(rem));
}

// Division with quotient recording: f = sum q[i] * gens[i] + r.  Quotient
// terms are accumulated as ring polynomials under ring_ord.
template <class K>
struct ModDivision {
    std::vector<Polynomial<K>> quotients;
    ModPoly<K> remainder;
};

template <class K>
ModDivision<K> divide_record(const ModPoly<K>& f, const std::vector<ModPoly<K>>& gens,
                             const MonomialOrder& ring_ord) {
    const RingContext& R = *f.ctx();
    std::vector<std::vector<Term<K>>> qt(gens.size());
    ModPoly<K> h = f;
    std::vector<ModTerm<K>> rem;
    while (!h.is_zero()) {
        const ModTerm<K>& lt = h.leading_term();
        bool reduced = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            if (g.is_zero()) continue;
            const ModTerm<K>& gl = g.leading_term();
            if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
                K c = field_ops<K>::div(R, lt.c, gl.c);
                Monomial mu = lt.m.divided_by(gl.m);
                qt[gi].push_back({mu, c});
                h = h.sub_mul(c, mu, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            h = h.tail();
        }
    }
    ModDivision<K> out;
    out.quotients.reserve(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        out.quotients.push_back(
            Polynomial<K>::from_terms(f.ctx(), ring_ord, std::move(qt[gi])));
    out.remainder = ModPoly<K>::from_terms(f.ctx(), f.order(), f.ncomp(), std::move(rem));
    return out;
}

template <class K>
ModPoly<K> s_vector(const ModPoly<K>& f, const ModPoly<K>& g) {
    const RingContext& R = *f.ctx();
    const ModTerm<K>& lf = f.leading_term();
    const ModTerm<K>& lg = g.leading_term();
    if (lf.comp != lg.comp)
        throw std::invalid_argument("s_vector: leading terms in different components");
    Monomial l = lcm(lf.m, lg.m);
    ModPoly<K> a = f.times_term(field_ops<K>::inv(R, lf.c), l.divided_by(lf.m));
    ModPoly<K> b = g.times_term(field_ops<K>::inv(R, lg.c), l.divided_by(lg.m));
    return a - b;
}

namespace detail {

// Fixpoint auto-reduction, mirroring the ring version.  Preserves the
// generated submodule.
template <class K>
std::vector<ModPoly<K>> interreduce_mod(std::vector<ModPoly<K>> g) {
    g.erase(std::remove_if(g.begin(), g.end(), [](const ModPoly<K>& p) { return p.is_zero(); }),
            g.end());
    if (g.empty()) return g;
    auto ord = g.front().order();
    std::sort(g.begin(), g.end(), [&](const ModPoly<K>& a, const ModPoly<K>& b) {
        int c = ord->cmp(a.leading_term().m, a.leading_term().comp, b.leading_term().m,
                         b.leading_term().comp);
        if (c != 0) return c < 0;
        return ModPoly<K>::canonical_less(a, b);
    });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<ModPoly<K>> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            ModPoly<K> r = normal_form(g[i], others);
            if (r.is_zero()) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
                changed = true;
            } else if (r != g[i]) {
                g[i] = r;
                changed = true;
            }
        }
    }
    for (auto& p : g) p = p.monic();
    std::sort(g.begin(), g.end(), [&](const ModPoly<K>& a, const ModPoly<K>& b) {
        return ord->cmp(a.leading_term().m, a.leading_term().comp, b.leading_term().m,
                        b.leading_term().comp) > 0;
    });
    return g;
}

template <class K>
struct ModSPair {
    unsigned deg = 0;
    Monomial lcm_m;
    int comp = 0;
    int i = 0, j = 0;
};

}  // namespace detail

// Reduced Groebner basis of a submodule of a free module.
template <class K>
class ModuleGB {
public:
    ModuleGB() = default;
    ModuleGB(RingPtr ctx, ModOrderPtr ord, int ncomp, std::vector<ModPoly<K>> g)
        : ctx_(std::move(ctx)), ord_(std::move(ord)), ncomp_(ncomp), g_(std::move(g)) {}

    const RingPtr& ctx() const { return ctx_; }
    const ModOrderPtr& order() const { return ord_; }
    int ncomp() const { return ncomp_; }
    const std::vector<ModPoly<K>>& elements() const { return g_; }
    bool is_zero_module() const { return g_.empty(); }

    ModPoly<K> reduce(const ModPoly<K>& f) const { return normal_form(f, g_); }
    bool contains(const ModPoly<K>& f) const { return reduce(f).is_zero(); }

    bool operator==(const ModuleGB& o) const {
        if (ncomp_ != o.ncomp_ || g_.size() != o.g_.size()) return false;
        for (std::size_t i = 0; i < g_.size(); ++i)
            if (g_[i] != o.g_[i]) return false;
        return true;
    }
    bool operator!=(const ModuleGB& o) const { return !(*this == o); }

private:
    RingPtr ctx_;
    ModOrderPtr ord_;
    int ncomp_ = 0;
    std::vector<ModPoly<K>> g_;
};

// Buchberger for submodules.  Pair pruning uses the chain criterion only; the
// coprimality shortcut is not sound for modules and is never applied.
template <class K>
ModuleGB<K> module_buchberger(RingPtr ctx, ModOrderPtr ord, int ncomp,
                              std::vector<ModPoly<K>> input) {
    using SPair = detail::ModSPair<K>;
    std::vector<ModPoly<K>> g = detail::interreduce_mod<K>(std::move(input));
    std::vector<SPair> pairs;

    auto make_pair = [&](int i, int j) {
        const ModTerm<K>& a = g[static_cast<std::size_t>(i)].leading_term();
        const ModTerm<K>& b = g[static_cast<std::size_t>(j)].leading_term();
        SPair p;
        p.lcm_m = lcm(a.m, b.m);
        p.deg = p.lcm_m.deg();
        p.comp = a.comp;
        p.i = i;
        p.j = j;
        return p;
    };

    auto update_pairs = [&](int t) {
        const ModTerm<K>& lt_t = g[static_cast<std::size_t>(t)].leading_term();
        std::vector<SPair> fresh;
        for (int i = 0; i < t; ++i) {
            if (g[static_cast<std::size_t>(i)].leading_term().comp != lt_t.comp) continue;
            fresh.push_back(make_pair(i, t));
        }
        // Discard a fresh pair when another fresh lcm properly divides it.
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm_m.divides(fresh[a].lcm_m) &&
                    !(fresh[b].lcm_m == fresh[a].lcm_m)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // Among equal lcms keep a single representative (lowest i).
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < a; ++b) {
                if (drop[b]) continue;
                if (fresh[a].lcm_m == fresh[b].lcm_m) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // Chain criterion against surviving old pairs.
        std::vector<SPair> kept_old;
        kept_old.reserve(pairs.size());
        for (const auto& p : pairs) {
            bool chained = false;
            if (p.comp == lt_t.comp && lt_t.m.divides(p.lcm_m)) {
                Monomial l_it =
                    lcm(g[static_cast<std::size_t>(p.i)].leading_term().m, lt_t.m);
                Monomial l_jt =
                    lcm(g[static_cast<std::size_t>(p.j)].leading_term().m, lt_t.m);
                if (!(l_it == p.lcm_m) && !(l_jt == p.lcm_m)) chained = true;
            }
            if (!chained) kept_old.push_back(p);
        }
        pairs = std::move(kept_old);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);
    };

    for (int t = 1; t < static_cast<int>(g.size()); ++t) update_pairs(t);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a) {
            const SPair& p = pairs[a];
            const SPair& q = pairs[best];
            if (p.deg != q.deg) {
                if (p.deg < q.deg) best = a;
                continue;
            }
            int c = ord->cmp(p.lcm_m, p.comp, q.lcm_m, q.comp);
            if (c != 0) {
                if (c < 0) best = a;
                continue;
            }
            if (p.i != q.i) {
                if (p.i < q.i) best = a;
                continue;
            }
            if (p.j < q.j) best = a;
        }
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        ModPoly<K> s = s_vector(g[static_cast<std::size_t>(p.i)],
                                g[static_cast<std::size_t>(p.j)]);
        ModPoly<K> r = normal_form(s, g);
        if (!r.is_zero()) {
            g.push_back(r.monic());
            update_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    g = detail::interreduce_mod<K>(std::move(g));
    return ModuleGB<K>(std::move(ctx), std::move(ord), ncomp, std::move(g));
}

// Dense polynomial matrix, row-major.  Rows index the target free module,
// columns the source.
template <class K>
struct PolyMatrix {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<Polynomial<K>>> e;  // e[r][c]

    static PolyMatrix zero(const RingPtr& ctx, const MonomialOrder& ord, int nrows, int ncols) {
        PolyMatrix m;
        m.nrows = nrows;
        m.ncols = ncols;
        m.e.assign(static_cast<std::size_t>(nrows),
                   std::vector<Polynomial<K>>(static_cast<std::size_t>(ncols),
                                              Polynomial<K>::zero(ctx, ord)));
        return m;
    }

    std::vector<Polynomial<K>> column(int c) const {
        std::vector<Polynomial<K>> col;
        col.reserve(static_cast<std::size_t>(nrows));
        for (int r = 0; r < nrows; ++r)
            col.push_back(e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        return col;
    }
};

// Generators of ker(M) for M : R^ncols -> R^nrows, computed by a Groebner
// basis of the graph submodule of R^(nrows+ncols) under POT with the target
// block dominant.  The returned columns are a reduced Groebner basis of the
// kernel under POT(ring_ord) on R^ncols.
template <class K>
std::vector<std::vector<Polynomial<K>>> kernel_of_matrix(const RingPtr& ctx,
                                                         const MonomialOrder& ring_ord,
                                                         const PolyMatrix<K>& M) {
    if (M.ncols == 0) return {};
    ModOrderPtr big = ModuleOrder::pot(ring_ord);
    int ncomp = M.nrows + M.ncols;
    std::vector<ModPoly<K>> gens;
    gens.reserve(static_cast<std::size_t>(M.ncols));
    for (int c = 0; c < M.ncols; ++c) {
        std::vector<ModTerm<K>> ts;
        for (int r = 0; r < M.nrows; ++r)
            for (const auto& t : M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].terms())
                ts.push_back({t.m, r, t.c});
        ts.push_back({Monomial::one(ctx->nvars()), M.nrows + c, field_ops<K>::one(*ctx)});
        gens.push_back(ModPoly<K>::from_terms(ctx, big, ncomp, std::move(ts)));
    }
    ModuleGB<K> gb = module_buchberger<K>(ctx, big, ncomp, std::move(gens));
    ModOrderPtr sub = ModuleOrder::pot(ring_ord);
    std::vector<std::vector<Polynomial<K>>> out;
    for (const auto& v : gb.elements()) {
        if (v.is_zero() || v.leading_term().comp < M.nrows) continue;
        std::vector<Polynomial<K>> col(static_cast<std::size_t>(M.ncols),
                                       Polynomial<K>::zero(ctx, ring_ord));
        for (const auto& t : v.terms()) {
            if (t.comp < M.nrows)
                throw std::logic_error("kernel element touches the target block");
            std::size_t c = static_cast<std::size_t>(t.comp - M.nrows);
            col[c] = col[c] + Polynomial<K>::term(ctx, ring_ord, t.m, t.c);
        }
        out.push_back(std::move(col));
    }
    return out;
}

// Matrix-vector product.
template <class K>
std::vector<Polynomial<K>> matrix_apply(const PolyMatrix<K>& M,
                                        const std::vector<Polynomial<K>>& v,
                                        const RingPtr& ctx, const MonomialOrder& ord) {
    std::vector<Polynomial<K>> out(static_cast<std::size_t>(M.nrows),
                                   Polynomial<K>::zero(ctx, ord));
    for (int r = 0; r < M.nrows; ++r)
        for (int c = 0; c < M.ncols; ++c)
            out[static_cast<std::size_t>(r)] =
                out[static_cast<std::size_t>(r)] +
                M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                    v[static_cast<std::size_t>(c)];
    return out;
}

// Matrix product A*B.
template <class K>
PolyMatrix<K> matrix_multiply(const PolyMatrix<K>& A, const PolyMatrix<K>& B,
                              const RingPtr& ctx, const MonomialOrder& ord) {
    if (A.ncols != B.nrows) throw std::invalid_argument("matrix_multiply: shape mismatch");
    PolyMatrix<K> C = PolyMatrix<K>::zero(ctx, ord, A.nrows, B.ncols);
    for (int r = 0; r < A.nrows; ++r)
        for (int k = 0; k < A.ncols; ++k) {
            const Polynomial<K>& a = A.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            if (a.is_zero()) continue;
            for (int c = 0; c < B.ncols; ++c) {
                const Polynomial<K>& b =
                    B.e[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                if (b.is_zero()) continue;
                C.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    C.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] + a * b;
            }
        }
    return C;
}

// Reduced Groebner basis of the submodule of R^ncomp spanned by columns.
template <class K>
ModuleGB<K> submodule_gb(const RingPtr& ctx, const MonomialOrder& ring_ord,
                         const std::vector<std::vector<Polynomial<K>>>& cols, int ncomp) {
    ModOrderPtr ord = ModuleOrder::pot(ring_ord);
    std::vector<ModPoly<K>> gens;
    gens.reserve(cols.size());
    for (const auto& col : cols) {
        if (static_cast<int>(col.size()) != ncomp)
            throw std::invalid_argument("submodule_gb: column length mismatch");
        gens.push_back(ModPoly<K>::from_column(col, ord));
    }
    return module_buchberger<K>(ctx, ord, ncomp, std::move(gens));
}

// (U : f) = {v : f*v in U} inside R^ncomp, via ker[ f*Id | U ].
template <class K>
std::vector<std::vector<Polynomial<K>>> submodule_colon_element(
    const RingPtr& ctx, const MonomialOrder& ring_ord,
    const std::vector<std::vector<Polynomial<K>>>& u_cols, int ncomp,
    const Polynomial<K>& f) {
    PolyMatrix<K> M = PolyMatrix<K>::zero(ctx, ring_ord, ncomp,
                                          ncomp + static_cast<int>(u_cols.size()));
    for (int r = 0; r < ncomp; ++r)
        M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = f;
    for (std::size_t c = 0; c < u_cols.size(); ++c)
        for (int r = 0; r < ncomp; ++r)
            M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(ncomp) + c] =
                u_cols[c][static_cast<std::size_t>(r)];
    auto ker = kernel_of_matrix<K>(ctx, ring_ord, M);
    std::vector<std::vector<Polynomial<K>>> out;
    for (const auto& k : ker) {
        std::vector<Polynomial<K>> v(k.begin(), k.begin() + ncomp);
        bool nonzero = false;
        for (const auto& p : v)
            if (!p.is_zero()) nonzero = true;
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

// V cap W inside R^ncomp: kernel of [V | W] mapped through V.
template <class K>
std::vector<std::vector<Polynomial<K>>> submodule_intersect(
    const RingPtr& ctx, const MonomialOrder& ring_ord,
    const std::vector<std::vector<Polynomial<K>>>& v_cols,
    const std::vector<std::vector<Polynomial<K>>>& w_cols, int ncomp) {
    int nv = static_cast<int>(v_cols.size());
    int nw = static_cast<int>(w_cols.size());
    PolyMatrix<K> M = PolyMatrix<K>::zero(ctx, ring_ord, ncomp, nv + nw);
    for (int c = 0; c < nv; ++c)
        for (int r = 0; r < ncomp; ++r)
            M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                v_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    for (int c = 0; c < nw; ++c)
        for (int r = 0; r < ncomp; ++r)
            M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(nv + c)] =
                w_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    auto ker = kernel_of_matrix<K>(ctx, ring_ord, M);
    std::vector<std::vector<Polynomial<K>>> out;
    for (const auto& k : ker) {
        std::vector<Polynomial<K>> img(static_cast<std::size_t>(ncomp),
                                       Polynomial<K>::zero(ctx, ring_ord));
        for (int c = 0; c < nv; ++c)
            for (int r = 0; r < ncomp; ++r)
                img[static_cast<std::size_t>(r)] =
                    img[static_cast<std::size_t>(r)] +
                    v_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] *
                        k[static_cast<std::size_t>(c)];
        bool nonzero = false;
        for (const auto& p : img)
            if (!p.is_zero()) nonzero = true;
        if (nonzero) out.push_back(std::move(img));
    }
    return out;
}

}  // namespace cmreg
