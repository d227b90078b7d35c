#pragma once
// Buchberger's algorithm with the normal selection strategy (lowest lcm degree
// first, ties by the monomial order on lcms) and Gebauer-Moeller pair pruning
// (coprime and chain criteria).  Output is the reduced monic basis, so the
// result is canonical for a given ideal and order.

#include <algorithm>
#include <set>
#include <vector>

#include "cmreg/polynomial.hpp"

namespace cmreg {

// Remainder of f under full division by gens (every term reduced).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens) {
    using F = field_ops<K>;
    if (gens.empty()) return f;
    const RingContext& R = *f.ctx();
    Polynomial<K> h = f;
    std::vector<Term<K>> rem_terms;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(h.leading_monomial())) {
                K c = F::div(R, h.leading_coefficient(), g.leading_coefficient());
                Monomial mu = h.leading_monomial().divided_by(g.leading_monomial());
                h = h.sub_mul(c, mu, g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem_terms.push_back(h.leading_term());
            h = h.tail();
        }
    }
    // Terms were collected in strictly descending order already.
    return Polynomial<K>::from_terms(f.ctx(), f.order(), std::move(rem_terms));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    using F = field_ops<K>;
    const RingContext& R = *f.ctx();
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = l.divided_by(f.leading_monomial());
    Monomial mg = l.divided_by(g.leading_monomial());
    Polynomial<K> a = f.times_term(F::inv(R, f.leading_coefficient()), mf);
    Polynomial<K> b = g.times_term(F::inv(R, g.leading_coefficient()), mg);
    return a - b;
}

template <class K>
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ctx, MonomialOrder ord, std::vector<Polynomial<K>> gens)
        : ctx_(std::move(ctx)), ord_(std::move(ord)), g_(std::move(gens)) {}

    const RingPtr& ctx() const { return ctx_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial<K>>& elements() const { return g_; }
    bool is_zero_ideal() const { return g_.empty(); }
    bool contains_one() const { return g_.size() == 1 && g_[0].is_constant() && !g_[0].is_zero(); }

    Polynomial<K> reduce(const Polynomial<K>& f) const {
        return normal_form(f.with_order(ord_), g_);
    }
    bool contains(const Polynomial<K>& f) const { return reduce(f).is_zero(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> l;
        l.reserve(g_.size());
        for (const auto& p : g_) l.push_back(p.leading_monomial());
        return l;
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        if (a.ord_ != b.ord_ || a.g_.size() != b.g_.size()) return false;
        for (std::size_t i = 0; i < a.g_.size(); ++i)
            if (a.g_[i] != b.g_[i]) return false;
        return true;
    }
    friend bool operator!=(const GroebnerBasis& a, const GroebnerBasis& b) { return !(a == b); }

private:
    RingPtr ctx_;
    MonomialOrder ord_;
    std::vector<Polynomial<K>> g_;
};

namespace detail {

// Fully interreduces a set of polynomials: repeatedly replaces each element by
// its normal form against the others until stable, then normalizes to monic.
// Preserves the generated ideal.  Applied to a Groebner basis this yields the
// reduced basis.
template <class K>
std::vector<Polynomial<K>> interreduce(const RingPtr& ctx, const MonomialOrder& ord,
                                       std::vector<Polynomial<K>> g) {
    (void)ctx;
    g.erase(std::remove_if(g.begin(), g.end(), [](const Polynomial<K>& p) { return p.is_zero(); }),
            g.end());
    std::sort(g.begin(), g.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        int c = ord.cmp(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return Polynomial<K>::canonical_less(a, b);
    });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            Polynomial<K> r = normal_form(g[i], others);
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
    std::sort(g.begin(), g.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
        return ord.cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return g;
}

struct SPair {
    unsigned deg;
    Monomial lcm_m;
    int i, j;
};

}  // namespace detail

template <class K>
GroebnerBasis<K> buchberger(const RingPtr& ctx, const MonomialOrder& ord,
                            const std::vector<Polynomial<K>>& input) {
    std::vector<Polynomial<K>> basis;
    for (const auto& f : input)
        if (!f.is_zero()) basis.push_back(f.with_order(ord));
    basis = detail::interreduce(ctx, ord, std::move(basis));
    if (basis.empty()) return GroebnerBasis<K>(ctx, ord, {});

    auto pair_less = [&ord](const detail::SPair& a, const detail::SPair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.cmp(a.lcm_m, b.lcm_m);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<detail::SPair> pairs;

    auto lm = [&](int i) -> const Monomial& { return basis[static_cast<std::size_t>(i)].leading_monomial(); };

    // Gebauer-Moeller update: fold index t into the pair set.
    auto update_pairs = [&](int t) {
        std::vector<detail::SPair> fresh;
        for (int i = 0; i < t; ++i) {
            Monomial l = lcm(lm(i), lm(t));
            fresh.push_back({l.deg(), l, i, t});
        }
        // Chain criterion among the new pairs: drop (i,t) when some other new
        // lcm properly divides lcm(i,t).
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm_m != fresh[a].lcm_m && fresh[b].lcm_m.divides(fresh[a].lcm_m)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // Among equal lcms keep one; drop the whole class if any member is a
        // coprime pair (its S-polynomial reduces to zero, and it witnesses the
        // rest of the class).
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            bool class_coprime = coprime(lm(fresh[a].i), lm(fresh[a].j));
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b] || fresh[b].lcm_m != fresh[a].lcm_m) continue;
                drop[b] = true;
                if (coprime(lm(fresh[b].i), lm(fresh[b].j))) class_coprime = true;
            }
            if (class_coprime) drop[a] = true;
        }
        // Coprime criterion on the survivors.
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && coprime(lm(fresh[a].i), lm(fresh[a].j))) drop[a] = true;
        // Chain criterion against the old pairs.
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                   [&](const detail::SPair& p) {
                                       if (!lm(t).divides(p.lcm_m)) return false;
                                       if (lcm(lm(p.i), lm(t)) == p.lcm_m) return false;
                                       if (lcm(lm(p.j), lm(t)) == p.lcm_m) return false;
                                       return true;
                                   }),
                    pairs.end());
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);
    };

    for (int t = 1; t < static_cast<int>(basis.size()); ++t) update_pairs(t);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        detail::SPair p = *it;
        pairs.erase(it);
        Polynomial<K> s = s_polynomial(basis[static_cast<std::size_t>(p.i)],
                                       basis[static_cast<std::size_t>(p.j)]);
        Polynomial<K> r = normal_form(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        update_pairs(static_cast<int>(basis.size()) - 1);
    }

    return GroebnerBasis<K>(ctx, ord, detail::interreduce(ctx, ord, std::move(basis)));
}

template <class K>
bool ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    return gb.contains(f);
}

}  // namespace cmreg
