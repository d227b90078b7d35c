#pragma once

// Hilbert series of graded quotients: numerator over (1-t)^nvars computed by
// a pivot-variable recursion on the lead-term ideal, plus the derived
// invariants (Hilbert function, Krull dimension, degree).

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmreg/groebner.hpp"
#include "cmreg/monomial.hpp"
#include "cmreg/resolution.hpp"

namespace cmreg {

// Dense integer polynomial in one variable t.
struct ZPoly {
    std::vector<mpz_class> c;  // c[k] = coefficient of t^k

    static ZPoly zero() { return {}; }
    static ZPoly one() { return ZPoly{{mpz_class(1)}}; }
    static ZPoly monomial(int k, long coeff = 1) {
        ZPoly p;
        p.c.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
        p.c.back() = coeff;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    mpz_class coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return mpz_class(0);
        return c[static_cast<std::size_t>(k)];
    }

    ZPoly operator+(const ZPoly& o) const {
        ZPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.normalize();
        return r;
    }

    ZPoly operator-(const ZPoly& o) const {
        ZPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.normalize();
        return r;
    }

    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        ZPoly r;
        r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        r.normalize();
        return r;
    }

    // Multiplication by t^k.
    ZPoly shifted(int k) const {
        if (is_zero()) return zero();
        ZPoly r;
        r.c.assign(c.size() + static_cast<std::size_t>(k), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<std::size_t>(k)] = c[i];
        return r;
    }

    mpz_class eval_one() const {
        mpz_class s = 0;
        for (const auto& a : c) s += a;
        return s;
    }

    // Exact division by (1 - t); requires eval_one() == 0.
    ZPoly divided_by_one_minus_t() const {
        if (eval_one() != 0) throw std::logic_error("not divisible by 1-t");
        // If p = (1-t) q with deg q = deg p - 1: q_0 = p_0, q_k = p_k + q_{k-1}.
        ZPoly q;
        if (is_zero()) return q;
        q.c.assign(c.size() - 1, mpz_class(0));
        mpz_class run = 0;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            run += c[k];
            q.c[k] = run;
        }
        q.normalize();
        return q;
    }

    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    // "1 - t^3 + 2*t^7" style, ascending degrees.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            mpz_class a = c[k];
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            mpz_class mag = abs(a);
            bool unit = (mag == 1);
            if (k == 0) {
                os << mag.get_str();
            } else {
                if (!unit) os << mag.get_str() << "*";
                os << "t";
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }
};

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = 0; i < a.nvars(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    gens.erase(std::unique(gens.begin(), gens.end(),
                           [](const Monomial& a, const Monomial& b) { return a == b; }),
               gens.end());
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    gens = std::move(kept);
}

inline std::string monomial_set_key(const std::vector<Monomial>& gens, int nvars) {
    std::string key;
    key.reserve(gens.size() * static_cast<std::size_t>(nvars) * 2 + 2);
    key.push_back(static_cast<char>(nvars));
    for (const auto& m : gens)
        for (int i = 0; i < nvars; ++i) {
            unsigned e = m[i];
            key.push_back(static_cast<char>(e & 0xff));
            key.push_back(static_cast<char>((e >> 8) & 0xff));
        }
    return key;
}

inline ZPoly numerator_rec(std::vector<Monomial> gens, int nvars,
                           std::map<std::string, ZPoly>& cache) {
    minimalize_monomials(gens);
    if (gens.empty()) return ZPoly::one();
    if (gens.front().deg() == 0) return ZPoly::zero();

    // Pairwise coprime: product formula.
    bool all_coprime = true;
    for (std::size_t a = 0; a < gens.size() && all_coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            if (!coprime(gens[a], gens[b])) {
                all_coprime = false;
                break;
            }
    if (all_coprime) {
        ZPoly p = ZPoly::one();
        for (const auto& m : gens)
            p = p * (ZPoly::one() - ZPoly::monomial(static_cast<int>(m.deg())));
        return p;
    }

    std::string key = monomial_set_key(gens, nvars);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // Pivot: the variable hitting the most generators, lowest index on ties.
    int pivot = -1, best = 0;
    for (int v = 0; v < nvars; ++v) {
        int cnt = 0;
        for (const auto& m : gens)
            if (m[v] > 0) ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    // Not pairwise coprime means some variable occurs at least twice.
    if (pivot < 0 || best < 2) throw std::logic_error("pivot selection failed");

    std::vector<Monomial> plus;  // I + (pivot)
    plus.push_back(Monomial::var(nvars, pivot));
    for (const auto& m : gens)
        if (m[pivot] == 0) plus.push_back(m);

    std::vector<Monomial> colon;  // I : pivot
    for (const auto& m : gens) {
        if (m[pivot] > 0)
            colon.push_back(m.divided_by(Monomial::var(nvars, pivot)));
        else
            colon.push_back(m);
    }

    ZPoly r = numerator_rec(std::move(plus), nvars, cache) +
              numerator_rec(std::move(colon), nvars, cache).shifted(1);
    cache.emplace(std::move(key), r);
    return r;
}

}  // namespace detail

// Hilbert series numerator of R/(monomial ideal) over (1-t)^nvars.
inline ZPoly hilbert_numerator_monomial(int nvars, std::vector<Monomial> gens) {
    std::map<std::string, ZPoly> cache;
    return detail::numerator_rec(std::move(gens), nvars, cache);
}

// Numerator for R/I via the lead-term ideal of a Groebner basis.  Valid for
// any ideal when the order is degree-compatible; the callers keep to grevlex.
template <class K>
ZPoly hilbert_numerator(const GroebnerBasis<K>& gb) {
    return hilbert_numerator_monomial(gb.ctx()->nvars(), gb.leading_monomials());
}

template <class K>
ZPoly hilbert_numerator(const RingPtr& ctx, const MonomialOrder& ord,
                        const std::vector<Polynomial<K>>& gens) {
    return hilbert_numerator<K>(buchberger<K>(ctx, ord, gens));
}

// Alternating sum of t^twist over a graded complex; for a resolution of M
// this is the numerator of the Hilbert series of M.
template <class K>
ZPoly series_numerator_from_resolution(const GradedComplex<K>& res) {
    ZPoly n;
    int sign = 1;
    for (const auto& level : res.twists) {
        for (int d : level) {
            ZPoly term = ZPoly::monomial(d, sign);
            n = n + term;
        }
        sign = -sign;
    }
    return n;
}

// (numerator with all (1-t) factors removed, number of factors removed)
inline std::pair<ZPoly, int> reduce_numerator(ZPoly n) {
    int e = 0;
    while (!n.is_zero() && n.eval_one() == 0) {
        n = n.divided_by_one_minus_t();
        ++e;
    }
    return {std::move(n), e};
}

// Krull dimension of R/I from the numerator; -1 for the zero module.
inline int dimension_from_numerator(const ZPoly& n, int nvars) {
    if (n.is_zero()) return -1;
    auto [red, e] = reduce_numerator(n);
    (void)red;
    return nvars - e;
}

// Degree (multiplicity) of R/I: reduced numerator evaluated at 1.
inline mpz_class degree_from_numerator(const ZPoly& n) {
    if (n.is_zero()) return mpz_class(0);
    return reduce_numerator(n).first.eval_one();
}

namespace detail {

inline mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || n < k) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace detail

// dim_k (R/I)_d from the numerator: sum_j N_j * C(d-j+n-1, n-1).
inline mpz_class hilbert_function_from_numerator(const ZPoly& n, int nvars, int d) {
    mpz_class s = 0;
    for (int j = 0; j <= n.degree(); ++j) {
        mpz_class nj = n.coeff(j);
        if (nj == 0) continue;
        s += nj * detail::binom(d - j + nvars - 1, nvars - 1);
    }
    return s;
}

template <class K>
mpz_class hilbert_function_quotient(const GroebnerBasis<K>& gb, int d) {
    return hilbert_function_from_numerator(hilbert_numerator<K>(gb), gb.ctx()->nvars(), d);
}

// Independent oracle: counts degree-d monomials outside the monomial ideal.
inline mpz_class standard_monomial_count(int nvars, const std::vector<Monomial>& lt_gens,
                                         int d) {
    if (d < 0) return mpz_class(0);
    mpz_class count = 0;
    Monomial cur = Monomial::one(nvars);
    // Depth-first distribution of degree d over the variables.
    struct Frame {
        int var;
        int remaining;
    };
    std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0);
    // Recursive lambda over variable index.
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == nvars - 1) {
            Monomial m = Monomial::one(nvars);
            for (int i = 0; i < nvars - 1; ++i)
                m.set(i, exps[static_cast<std::size_t>(i)]);
            m.set(nvars - 1, static_cast<unsigned>(remaining));
            for (const auto& g : lt_gens)
                if (g.divides(m)) return;
            ++count;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(v)] = static_cast<unsigned>(e);
            self(self, v + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(v)] = 0;
    };
    (void)cur;
    rec(rec, 0, d);
    return count;
}

// dim_k U_d for a submodule U of a graded free module with the given twists,
// presented by a module Groebner basis: counts lead-term module monomials
// componentwise, which is valid because passing to lead terms preserves
// graded dimensions.
template <class K>
mpz_class submodule_graded_dimension(const ModuleGB<K>& gb, const std::vector<int>& twists,
                                     int d) {
    int nvars = gb.ctx()->nvars();
    mpz_class s = 0;
    for (int r = 0; r < gb.ncomp(); ++r) {
        std::vector<Monomial> lt;
        for (const auto& v : gb.elements())
            if (!v.is_zero() && v.leading_term().comp == r) lt.push_back(v.leading_term().m);
        if (lt.empty()) continue;
        int e = d - twists[static_cast<std::size_t>(r)];
        if (e < 0) continue;
        ZPoly num = hilbert_numerator_monomial(nvars, lt);
        mpz_class in_ideal = detail::binom(e + nvars - 1, nvars - 1) -
                             hilbert_function_from_numerator(num, nvars, e);
        s += in_ideal;
    }
    return s;
}

// Printable series "(numerator)/(1-t)^nvars".
inline std::string hilbert_series_string(const ZPoly& n, int nvars) {
    std::ostringstream os;
    os << "(" << n.to_string() << ")/(1-t)^" << nvars;
    return os.str();
}

}  // namespace cmreg
