#pragma once
// Polynomial<K>: multivariate polynomial with terms sorted strictly descending
// in the attached monomial order.  Immutable value semantics: every operation
// returns a freshly normalized polynomial.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmreg/order.hpp"

namespace cmreg {

template <class K>
struct Term {
    Monomial m;
    K c;
};

template <class K>
class Polynomial {
public:
    using F = field_ops<K>;

    Polynomial() = default;

    Polynomial(RingPtr ctx, MonomialOrder ord)
        : ctx_(std::move(ctx)), ord_(std::move(ord)) {}

    static Polynomial zero(RingPtr ctx, MonomialOrder ord) { return Polynomial(std::move(ctx), std::move(ord)); }

    static Polynomial constant(RingPtr ctx, MonomialOrder ord, const K& c) {
        Polynomial p(std::move(ctx), std::move(ord));
        if (!F::is_zero(c)) p.t_.push_back({Monomial::one(p.ctx_->nvars()), c});
        return p;
    }

    static Polynomial variable(RingPtr ctx, MonomialOrder ord, int i, unsigned e = 1) {
        Polynomial p(ctx, std::move(ord));
        p.t_.push_back({Monomial::var(ctx->nvars(), i, e), F::one(*ctx)});
        return p;
    }

    static Polynomial term(RingPtr ctx, MonomialOrder ord, const Monomial& m, const K& c) {
        Polynomial p(std::move(ctx), std::move(ord));
        if (!F::is_zero(c)) p.t_.push_back({m, c});
        return p;
    }

    // Normalizes arbitrary term lists: sorts descending, merges equal
    // monomials, drops zero coefficients.
    static Polynomial from_terms(RingPtr ctx, MonomialOrder ord, std::vector<Term<K>> terms) {
        Polynomial p(std::move(ctx), std::move(ord));
        std::sort(terms.begin(), terms.end(), [&p](const Term<K>& a, const Term<K>& b) {
            return p.ord_.cmp(a.m, b.m) > 0;
        });
        p.t_.reserve(terms.size());
        for (auto& tm : terms) {
            if (!p.t_.empty() && p.t_.back().m == tm.m) {
                p.t_.back().c = F::add(*p.ctx_, p.t_.back().c, tm.c);
                if (F::is_zero(p.t_.back().c)) p.t_.pop_back();
            } else if (!F::is_zero(tm.c)) {
                p.t_.push_back(std::move(tm));
            }
        }
        return p;
    }

    const RingPtr& ctx() const { return ctx_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term<K>>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }

    const Term<K>& leading_term() const {
        if (t_.empty()) throw std::domain_error("leading_term of zero polynomial");
        return t_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().m; }
    const K& leading_coefficient() const { return leading_term().c; }

    // All terms after the leading one.
    Polynomial tail() const {
        if (t_.empty()) return *this;
        Polynomial r(ctx_, ord_);
        r.t_.assign(t_.begin() + 1, t_.end());
        return r;
    }

    // Total degree (max over terms); -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& tm : t_) d = std::max(d, static_cast<int>(tm.m.deg()));
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& tm : t_)
            if (tm.m.deg() != t_.front().m.deg()) return false;
        return true;
    }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    Polynomial with_order(const MonomialOrder& ord) const {
        if (ord == ord_) return *this;
        return from_terms(ctx_, ord, t_);
    }

    Polynomial operator-() const {
        Polynomial r(ctx_, ord_);
        r.t_.reserve(t_.size());
        for (const auto& tm : t_) r.t_.push_back({tm.m, F::neg(*ctx_, tm.c)});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(a.ctx_, a.ord_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() && j < b.t_.size()) {
            int c = a.ord_.cmp(a.t_[i].m, b.t_[j].m);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                r.t_.push_back(b.t_[j++]);
            } else {
                K s = F::add(*a.ctx_, a.t_[i].c, b.t_[j].c);
                if (!F::is_zero(s)) r.t_.push_back({a.t_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
        for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        std::vector<Term<K>> terms;
        terms.reserve(a.t_.size() * b.t_.size());
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_)
                terms.push_back({ta.m * tb.m, F::mul(*a.ctx_, ta.c, tb.c)});
        return from_terms(a.ctx_, a.ord_, std::move(terms));
    }

    // this * (c * mono); multiplication by a monomial preserves term order.
    Polynomial times_term(const K& c, const Monomial& mono) const {
        Polynomial r(ctx_, ord_);
        if (F::is_zero(c)) return r;
        r.t_.reserve(t_.size());
        for (const auto& tm : t_) r.t_.push_back({tm.m * mono, F::mul(*ctx_, tm.c, c)});
        return r;
    }

    Polynomial scaled(const K& c) const { return times_term(c, Monomial::one(ctx_->nvars())); }

    // this - c * mono * g, the inner step of polynomial division.
    Polynomial sub_mul(const K& c, const Monomial& mono, const Polynomial& g) const {
        check_compatible(g);
        Polynomial r(ctx_, ord_);
        r.t_.reserve(t_.size() + g.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() && j < g.t_.size()) {
            Monomial gm = g.t_[j].m * mono;
            int cres = ord_.cmp(t_[i].m, gm);
            if (cres > 0) {
                r.t_.push_back(t_[i++]);
            } else if (cres < 0) {
                r.t_.push_back({gm, F::neg(*ctx_, F::mul(*ctx_, c, g.t_[j].c))});
                ++j;
            } else {
                K s = F::sub(*ctx_, t_[i].c, F::mul(*ctx_, c, g.t_[j].c));
                if (!F::is_zero(s)) r.t_.push_back({t_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
        for (; j < g.t_.size(); ++j)
            r.t_.push_back({g.t_[j].m * mono, F::neg(*ctx_, F::mul(*ctx_, c, g.t_[j].c))});
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        if (F::is_one(leading_coefficient())) return *this;
        return scaled(F::inv(*ctx_, leading_coefficient()));
    }

    // Exact division by g; throws if the remainder is nonzero.
    Polynomial divided_by(const Polynomial& g) const {
        check_compatible(g);
        if (g.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial q(ctx_, ord_);
        Polynomial h = *this;
        while (!h.is_zero()) {
            if (!g.leading_monomial().divides(h.leading_monomial()))
                throw std::domain_error("polynomial division not exact");
            K c = F::div(*ctx_, h.leading_coefficient(), g.leading_coefficient());
            Monomial mu = h.leading_monomial().divided_by(g.leading_monomial());
            q.t_.push_back({mu, c});
            h = h.sub_mul(c, mu, g);
        }
        return from_terms(ctx_, ord_, std::move(q.t_));
    }

    K evaluate(const std::vector<K>& point) const {
        K acc = F::zero(*ctx_);
        for (const auto& tm : t_) {
            K v = tm.c;
            for (int i = 0; i < ctx_->nvars(); ++i)
                for (unsigned e = 0; e < tm.m[i]; ++e)
                    v = F::mul(*ctx_, v, point[static_cast<std::size_t>(i)]);
            acc = F::add(*ctx_, acc, v);
        }
        return acc;
    }

    // Maps variables into another ring: var_map[i] is the index of variable i
    // in the target ring, or -1 if it must not occur.
    Polynomial map_vars(const RingPtr& nctx, const MonomialOrder& nord,
                        const std::vector<int>& var_map) const {
        std::vector<Term<K>> terms;
        terms.reserve(t_.size());
        for (const auto& tm : t_) {
            Monomial m(nctx->nvars());
            for (int i = 0; i < ctx_->nvars(); ++i) {
                if (tm.m[i] == 0) continue;
                int j = var_map[static_cast<std::size_t>(i)];
                if (j < 0)
                    throw std::domain_error("map_vars: polynomial involves a dropped variable " +
                                            ctx_->var_name(i));
                m.set(j, tm.m[i]);
            }
            K c = tm.c;
            terms.push_back({m, std::move(c)});
        }
        return from_terms(nctx, nord, std::move(terms));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic total preorder for canonical basis sorting: compares term
    // sequences monomial-wise (descending polynomials compare by leading terms
    // first), then by coefficient string.
    static bool canonical_less(const Polynomial& a, const Polynomial& b) {
        std::size_t n = std::min(a.t_.size(), b.t_.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = a.ord_.cmp(a.t_[i].m, b.t_[i].m);
            if (c != 0) return c < 0;
            if (a.t_[i].c != b.t_[i].c)
                return F::to_string(a.t_[i].c) < F::to_string(b.t_[i].c);
        }
        return a.t_.size() < b.t_.size();
    }

private:
    void check_compatible(const Polynomial& o) const {
        require_same_ring(*ctx_, *o.ctx_);
        if (ord_ != o.ord_) throw std::invalid_argument("operands carry different monomial orders");
    }

    RingPtr ctx_;
    MonomialOrder ord_ = MonomialOrder::grevlex();
    std::vector<Term<K>> t_;
};

template <class K>
MonomialOrder default_order(const RingPtr&) {
    return MonomialOrder::grevlex();
}

}  // namespace cmreg
