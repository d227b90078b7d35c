#pragma once

// Ideal-level toolkit: sums, intersections, colons, saturation, elimination,
// homogenization, radical membership, nonzerodivisor and minimal-generator
// tests, monomial-curve and determinantal ideals.

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/module.hpp"
#include "cmreg/polynomial.hpp"
#include "cmreg/ring.hpp"

namespace cmreg {

// A variable name not present in the ring, derived from base.
inline std::string fresh_var_name(const RingContext& R, const std::string& base) {
    if (R.index_of(base) < 0) return base;
    for (int k = 0;; ++k) {
        std::string cand = base + std::to_string(k);
        if (R.index_of(cand) < 0) return cand;
    }
}

template <class K>
class Ideal {
public:
    Ideal(RingPtr ctx, MonomialOrder ord, std::vector<Polynomial<K>> gens)
        : ctx_(std::move(ctx)), ord_(std::move(ord)) {
        for (auto& g : gens) {
            require_same_ring(*ctx_, *g.ctx());
            if (!g.is_zero()) gens_.push_back(g.with_order(ord_));
        }
    }

    static Ideal zero(RingPtr ctx, MonomialOrder ord) {
        return Ideal(std::move(ctx), std::move(ord), {});
    }

    const RingPtr& ctx() const { return ctx_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }

    const GroebnerBasis<K>& gb() const {
        if (!gb_) gb_ = std::make_shared<GroebnerBasis<K>>(buchberger<K>(ctx_, ord_, gens_));
        return *gb_;
    }

    bool is_zero() const { return gb().is_zero_ideal(); }
    bool contains_one() const { return gb().contains_one(); }
    bool contains(const Polynomial<K>& f) const { return gb().contains(f); }

    bool contains_ideal(const Ideal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool operator==(const Ideal& other) const {
        require_same_ring(*ctx_, *other.ctx_);
        if (ord_ != other.ord_)
            throw std::invalid_argument("ideal comparison across orders");
        return gb() == other.gb();
    }
    bool operator!=(const Ideal& other) const { return !(*this == other); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

private:
    RingPtr ctx_;
    MonomialOrder ord_;
    std::vector<Polynomial<K>> gens_;
    mutable std::shared_ptr<GroebnerBasis<K>> gb_;
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(*a.ctx(), *b.ctx());
    std::vector<Polynomial<K>> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal<K>(a.ctx(), a.order(), std::move(gens));
}

// I cap J by tagging: t*I + (1-t)*J in an extended ring, eliminate t.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(*a.ctx(), *b.ctx());
    const RingPtr& R = a.ctx();
    int n = R->nvars();
    std::string tag = fresh_var_name(*R, "tg");
    RingPtr big = ring_with_prefix(R, {tag});
    MonomialOrder bord = MonomialOrder::block_elim(1);
    std::vector<int> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i + 1;

    Polynomial<K> t = Polynomial<K>::variable(big, bord, 0);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(big, bord, field_ops<K>::one(*big)) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.generators()) gens.push_back(t * f.map_vars(big, bord, up));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_t * g.map_vars(big, bord, up));

    GroebnerBasis<K> gb = buchberger<K>(big, bord, gens);
    std::vector<int> down(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i) + 1] = i;
    std::vector<Polynomial<K>> out;
    for (const auto& p : gb.elements()) {
        bool uses_tag = false;
        for (const auto& term : p.terms())
            if (term.m[0] > 0) uses_tag = true;
        if (!uses_tag) out.push_back(p.map_vars(R, a.order(), down));
    }
    return Ideal<K>(R, a.order(), std::move(out));
}

// I : (g) for a single nonzero g, via (I cap (g)) / g.
template <class K>
Ideal<K> quotient_by_element(const Ideal<K>& a, const Polynomial<K>& g) {
    if (g.is_zero()) throw std::invalid_argument("colon by zero element");
    Ideal<K> gi(a.ctx(), a.order(), {g});
    Ideal<K> meet = intersect(a, gi);
    std::vector<Polynomial<K>> out;
    for (const auto& h : meet.generators()) out.push_back(h.divided_by(g));
    return Ideal<K>(a.ctx(), a.order(), std::move(out));
}

// I : J = intersection of I : (g) over generators g of J.
template <class K>
Ideal<K> quotient(const Ideal<K>& a, const Ideal<K>& b) {
    require_same_ring(*a.ctx(), *b.ctx());
    std::vector<Polynomial<K>> gens;
    for (const auto& g : b.generators())
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw std::invalid_argument("colon by the zero ideal");
    Ideal<K> acc = quotient_by_element(a, gens.front());
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = intersect(acc, quotient_by_element(a, gens[i]));
    return acc;
}

// I : J^infinity, iterated colon to a fixpoint.
template <class K>
Ideal<K> saturate(const Ideal<K>& a, const Ideal<K>& b, int max_rounds = 200) {
    Ideal<K> cur = a;
    for (int round = 0; round < max_rounds; ++round) {
        Ideal<K> next = quotient(cur, b);
        if (next == cur) return cur;
        cur = next;
    }
    throw std::logic_error("saturation failed to stabilize");
}

// Elimination ideal: generators of I cap k[remaining vars], returned over the
// smaller ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& a, const std::vector<std::string>& drop_vars) {
    const RingPtr& R = a.ctx();
    int n = R->nvars();
    std::vector<bool> dropped(static_cast<std::size_t>(n), false);
    for (const auto& v : drop_vars) {
        int i = R->index_of(v);
        if (i < 0) throw std::invalid_argument("eliminate: unknown variable " + v);
        dropped[static_cast<std::size_t>(i)] = true;
    }
    int k = 0;
    for (bool d : dropped)
        if (d) ++k;
    if (k == 0) return a;

    // Reorder with the dropped block first.
    std::vector<std::string> names;
    std::vector<int> to_big(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        if (dropped[static_cast<std::size_t>(i)]) {
            to_big[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
            names.push_back(R->var_name(i));
        }
    std::vector<std::string> small_names;
    std::vector<int> big_to_small;
    big_to_small.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        if (!dropped[static_cast<std::size_t>(i)]) {
            to_big[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
            big_to_small[static_cast<std::size_t>(names.size())] =
                static_cast<int>(small_names.size());
            names.push_back(R->var_name(i));
            small_names.push_back(R->var_name(i));
        }
    RingPtr big = make_ring(names, R->characteristic());
    RingPtr small = make_ring(small_names, R->characteristic());
    MonomialOrder bord = MonomialOrder::block_elim(k);

    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.generators()) gens.push_back(f.map_vars(big, bord, to_big));
    GroebnerBasis<K> gb = buchberger<K>(big, bord, gens);

    std::vector<Polynomial<K>> out;
    for (const auto& p : gb.elements()) {
        bool uses_dropped = false;
        for (const auto& term : p.terms())
            for (int i = 0; i < k && !uses_dropped; ++i)
                if (term.m[i] > 0) uses_dropped = true;
        if (!uses_dropped) out.push_back(p.map_vars(small, a.order(), big_to_small));
    }
    return Ideal<K>(small, a.order(), std::move(out));
}

// Homogenization of the ideal of an affine variety: homogenizes a
// degree-compatible Groebner basis, not the raw generators, with a fresh last
// variable.  Returns the ideal of the projective closure.
template <class K>
Ideal<K> homogenize(const Ideal<K>& a, const std::string& new_var) {
    const RingPtr& R = a.ctx();
    if (R->index_of(new_var) >= 0)
        throw std::invalid_argument("homogenize: variable already in the ring");
    MonomialOrder grev = MonomialOrder::grevlex();
    GroebnerBasis<K> gb = buchberger<K>(R, grev, a.generators());

    RingPtr big = ring_with_suffix(R, {new_var});
    int n = R->nvars();
    std::vector<int> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial<K>> out;
    for (const auto& p : gb.elements()) {
        unsigned d = p.degree();
        std::vector<Term<K>> ts;
        for (const auto& t : p.terms()) {
            Monomial m(big->nvars());
            for (int i = 0; i < n; ++i) m.set(i, t.m[i]);
            m.set(n, d - t.m.deg());
            ts.push_back({m, t.c});
        }
        out.push_back(Polynomial<K>::from_terms(big, a.order(), std::move(ts)));
    }
    return Ideal<K>(big, a.order(), std::move(out));
}

// f in sqrt(I), by Rabinowitsch: 1 in I + (1 - y*f).
template <class K>
bool radical_membership(const Polynomial<K>& f, const Ideal<K>& a) {
    if (f.is_zero()) throw std::invalid_argument("radical membership of zero");
    const RingPtr& R = a.ctx();
    int n = R->nvars();
    std::string aux = fresh_var_name(*R, "rb");
    RingPtr big = ring_with_prefix(R, {aux});
    MonomialOrder bord = MonomialOrder::grevlex();
    std::vector<int> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Polynomial<K>> gens;
    for (const auto& g : a.generators()) gens.push_back(g.map_vars(big, bord, up));
    Polynomial<K> y = Polynomial<K>::variable(big, bord, 0);
    Polynomial<K> one = Polynomial<K>::constant(big, bord, field_ops<K>::one(*big));
    gens.push_back(one - y * f.map_vars(big, bord, up));
    return buchberger<K>(big, bord, gens).contains_one();
}

template <class K>
bool same_radical(const Ideal<K>& a, const Ideal<K>& b) {
    for (const auto& g : a.generators())
        if (!radical_membership(g, b)) return false;
    for (const auto& g : b.generators())
        if (!radical_membership(g, a)) return false;
    return true;
}

// f is a nonzerodivisor on R/I iff I : (f) = I.
template <class K>
bool is_nonzerodivisor(const Polynomial<K>& f, const Ideal<K>& a) {
    if (f.is_zero()) throw std::invalid_argument("nonzerodivisor test on zero");
    return quotient_by_element(a, f) == a;
}

// The product ideal f * a, generated by f times each generator of a.
template <class K>
Ideal<K> multiply(const Polynomial<K>& f, const Ideal<K>& a) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(a.generators().size());
    for (const auto& g : a.generators()) gens.push_back(f * g);
    return Ideal<K>(a.ctx(), a.order(), std::move(gens));
}

// Determinant by cofactor expansion along the first row, skipping zeros.
template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& M, const RingPtr& ctx,
                          const MonomialOrder& ord) {
    if (M.nrows != M.ncols) throw std::invalid_argument("determinant of non-square matrix");
    int n = M.nrows;
    if (n == 0) return Polynomial<K>::constant(ctx, ord, field_ops<K>::one(*ctx));
    if (n == 1) return M.e[0][0];
    Polynomial<K> det = Polynomial<K>::zero(ctx, ord);
    for (int c = 0; c < n; ++c) {
        const Polynomial<K>& a = M.e[0][static_cast<std::size_t>(c)];
        if (a.is_zero()) continue;
        PolyMatrix<K> sub = PolyMatrix<K>::zero(ctx, ord, n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                sub.e[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(cc)] =
                    M.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)];
                ++cc;
            }
        }
        Polynomial<K> term = a * determinant(sub, ctx, ord);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// Ideal of all t x t minors.
template <class K>
Ideal<K> minors_ideal(const PolyMatrix<K>& M, int t, const RingPtr& ctx,
                      const MonomialOrder& ord) {
    if (t < 1 || t > std::min(M.nrows, M.ncols))
        throw std::invalid_argument("minor size out of range");
    std::vector<Polynomial<K>> gens;
    std::vector<int> rows(static_cast<std::size_t>(t)), cols(static_cast<std::size_t>(t));
    // Lexicographic subset enumeration.
    auto next_subset = [](std::vector<int>& s, int limit) {
        int k = static_cast<int>(s.size());
        for (int i = k - 1; i >= 0; --i) {
            if (s[static_cast<std::size_t>(i)] < limit - (k - i)) {
                ++s[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < t; ++i) rows[static_cast<std::size_t>(i)] = i;
    do {
        for (int i = 0; i < t; ++i) cols[static_cast<std::size_t>(i)] = i;
        do {
            PolyMatrix<K> sub = PolyMatrix<K>::zero(ctx, ord, t, t);
            for (int r = 0; r < t; ++r)
                for (int c = 0; c < t; ++c)
                    sub.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        M.e[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])]
                           [static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])];
            Polynomial<K> d = determinant(sub, ctx, ord);
            if (!d.is_zero()) gens.push_back(d);
        } while (next_subset(cols, M.ncols));
    } while (next_subset(rows, M.nrows));
    return Ideal<K>(ctx, ord, std::move(gens));
}

// Prime ideal of the projective monomial curve of the given degrees, in a
// fresh ring named by var_names (one more name than degrees).
template <class K>
Ideal<K> monomial_curve_ideal(const std::vector<long>& degrees,
                              const std::vector<std::string>& var_names,
                              long characteristic, const MonomialOrder& ord) {
    int n = static_cast<int>(degrees.size());
    if (n < 1) throw std::invalid_argument("monomial curve needs at least one degree");
    for (int i = 0; i < n; ++i) {
        if (degrees[static_cast<std::size_t>(i)] <= 0)
            throw std::invalid_argument("monomial curve degrees must be positive");
        if (i > 0 && degrees[static_cast<std::size_t>(i)] <=
                         degrees[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("monomial curve degrees must increase");
    }
    if (static_cast<int>(var_names.size()) != n + 1)
        throw std::invalid_argument("monomial curve needs one variable per coordinate");

    RingPtr target = make_ring(var_names, characteristic);
    std::string s_name = fresh_var_name(*target, "s");
    std::string w_name = fresh_var_name(*target, s_name == "w" ? "w0" : "w");
    std::vector<std::string> big_names = {s_name, w_name};
    for (const auto& v : var_names) big_names.push_back(v);
    RingPtr big = make_ring(big_names, characteristic);
    MonomialOrder bord = MonomialOrder::block_elim(2);

    long top = degrees[static_cast<std::size_t>(n - 1)];
    std::vector<Polynomial<K>> gens;
    {
        // x_0 - s^top
        Monomial m(big->nvars());
        m.set(0, static_cast<unsigned>(top));
        gens.push_back(Polynomial<K>::variable(big, bord, 2) -
                       Polynomial<K>::term(big, bord, m, field_ops<K>::one(*big)));
    }
    for (int i = 1; i <= n; ++i) {
        long a = degrees[static_cast<std::size_t>(i - 1)];
        Monomial m(big->nvars());
        m.set(0, static_cast<unsigned>(top - a));
        m.set(1, static_cast<unsigned>(a));
        gens.push_back(Polynomial<K>::variable(big, bord, 2 + i) -
                       Polynomial<K>::term(big, bord, m, field_ops<K>::one(*big)));
    }
    Ideal<K> param(big, bord, std::move(gens));
    Ideal<K> elim = eliminate(param, {s_name, w_name});
    // Rebuild over the requested order.
    return Ideal<K>(elim.ctx(), ord, elim.generators());
}

// Minimal homogeneous generators, greedily by ascending degree; each survivor
// is kept only if it is not in the ideal of the earlier ones.
template <class K>
std::vector<Polynomial<K>> minimal_generators(const Ideal<K>& a) {
    if (!a.is_homogeneous())
        throw std::invalid_argument("minimal generators need homogeneous input");
    std::vector<Polynomial<K>> cand = a.gb().elements();
    std::sort(cand.begin(), cand.end(), [](const Polynomial<K>& f, const Polynomial<K>& g) {
        if (f.degree() != g.degree()) return f.degree() < g.degree();
        return Polynomial<K>::canonical_less(f, g);
    });
    std::vector<Polynomial<K>> kept;
    for (const auto& f : cand) {
        if (!kept.empty()) {
            GroebnerBasis<K> gb = buchberger<K>(a.ctx(), a.order(), kept);
            if (gb.contains(f)) continue;
        }
        kept.push_back(f);
    }
    return kept;
}

// Ideal generated by the minimal generators of degree <= d.
template <class K>
Ideal<K> truncate_ideal(const Ideal<K>& a, int d) {
    std::vector<Polynomial<K>> gens;
    for (const auto& f : minimal_generators(a))
        if (static_cast<int>(f.degree()) <= d) gens.push_back(f);
    return Ideal<K>(a.ctx(), a.order(), std::move(gens));
}

// f is part of a minimal generating set iff it is not generated in lower
// degrees.  Requires f in the ideal.
template <class K>
bool is_minimal_generator(const Polynomial<K>& f, const Ideal<K>& a) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("minimal generator test needs homogeneous f");
    if (!a.contains(f)) throw std::invalid_argument("minimal generator test: f not in ideal");
    std::vector<Polynomial<K>> lower;
    for (const auto& g : a.gb().elements())
        if (g.degree() < f.degree()) lower.push_back(g);
    if (lower.empty()) return true;
    return !buchberger<K>(a.ctx(), a.order(), lower).contains(f);
}

}  // namespace cmreg
