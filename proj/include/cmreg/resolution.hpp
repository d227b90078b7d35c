#pragma once

// Graded free complexes, Schreyer resolutions, minimization, Betti tables,
// regularity, projective dimension and depth.
//
// Twist convention: a generator of degree d contributes twist d to its level's
// list (R[-d] summand).  maps[i] is the matrix of F_{i+1} -> F_i with rows
// indexed by F_i and columns by F_{i+1}; entry (r,c) is homogeneous of degree
// twists[i+1][c] - twists[i][r] or zero.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/module.hpp"
#include "cmreg/polynomial.hpp"

namespace cmreg {

template <class K>
struct GradedComplex {
    RingPtr ctx;
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::vector<int>> twists;  // twists[k]: degrees of the F_k basis
    std::vector<PolyMatrix<K>> maps;       // maps[i]: F_{i+1} -> F_i

    int length() const { return static_cast<int>(twists.size()) - 1; }

    int rank(int level) const {
        return static_cast<int>(twists[static_cast<std::size_t>(level)].size());
    }

    // Checks shapes and entry homogeneity against the twist lists.
    void validate_graded() const {
        if (twists.empty()) throw std::logic_error("complex without levels");
        if (maps.size() + 1 != twists.size())
            throw std::logic_error("complex level/map count mismatch");
        for (std::size_t i = 0; i < maps.size(); ++i) {
            const PolyMatrix<K>& m = maps[i];
            if (m.nrows != static_cast<int>(twists[i].size()) ||
                m.ncols != static_cast<int>(twists[i + 1].size()))
                throw std::logic_error("matrix shape disagrees with twist lists");
            for (int r = 0; r < m.nrows; ++r)
                for (int c = 0; c < m.ncols; ++c) {
                    const Polynomial<K>& p =
                        m.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    if (p.is_zero()) continue;
                    if (!p.is_homogeneous())
                        throw std::logic_error("inhomogeneous matrix entry");
                    int want = twists[i + 1][static_cast<std::size_t>(c)] -
                               twists[i][static_cast<std::size_t>(r)];
                    if (static_cast<int>(p.degree()) != want)
                        throw std::logic_error("matrix entry degree violates twists");
                }
        }
    }

    // Consecutive compositions vanish.
    bool is_complex() const {
        for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
            PolyMatrix<K> prod = matrix_multiply(maps[i], maps[i + 1], ctx, ord);
            for (const auto& row : prod.e)
                for (const auto& p : row)
                    if (!p.is_zero()) return false;
        }
        return true;
    }

    // Minimal iff no map has a nonzero constant entry.
    bool is_minimal() const {
        for (const auto& m : maps)
            for (const auto& row : m.e)
                for (const auto& p : row)
                    if (!p.is_zero() && p.degree() == 0) return false;
        return true;
    }

    int max_degree_at(int level) const {
        const auto& t = twists[static_cast<std::size_t>(level)];
        if (t.empty()) throw std::logic_error("max degree of empty level");
        return *std::max_element(t.begin(), t.end());
    }
};

namespace detail {

// Sorts a level's Groebner basis by component ascending, then leading
// monomial lexicographically descending.  Distinct leading terms per
// component are guaranteed by minimality of the lead-term set, so the key is
// total; a canonical fallback keeps determinism regardless.
template <class K>
void sort_level(std::vector<ModPoly<K>>& g) {
    MonomialOrder lex = MonomialOrder::lex();
    std::sort(g.begin(), g.end(), [&](const ModPoly<K>& a, const ModPoly<K>& b) {
        const ModTerm<K>& la = a.leading_term();
        const ModTerm<K>& lb = b.leading_term();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        int c = lex.cmp(la.m, lb.m);
        if (c != 0) return c > 0;
        return ModPoly<K>::canonical_less(a, b);
    });
}

}  // namespace detail

// Schreyer resolution of F_0/im(gens): the level-0 Groebner basis becomes the
// first map, and each further level reads its syzygies off S-vector divisions
// under the induced Schreyer order, no Buchberger beyond level 0.
template <class K>
GradedComplex<K> schreyer_resolution(const RingPtr& ctx, const MonomialOrder& ord,
                                     const std::vector<int>& f0_twists,
                                     const std::vector<std::vector<Polynomial<K>>>& gen_cols,
                                     int max_levels = 0) {
    if (max_levels <= 0) max_levels = 2 * ctx->nvars() + 4;
    GradedComplex<K> res;
    res.ctx = ctx;
    res.ord = ord;
    res.twists.push_back(f0_twists);

    int ncomp = static_cast<int>(f0_twists.size());
    ModuleGB<K> gb0 = submodule_gb<K>(ctx, ord, gen_cols, ncomp);
    std::vector<ModPoly<K>> g = gb0.elements();
    if (g.empty()) return res;  // zero submodule: the module is free

    ModOrderPtr cur_ord = gb0.order();
    std::vector<int> cur_twists = f0_twists;

    for (int level = 1; level <= max_levels; ++level) {
        detail::sort_level(g);

        // Twists and matrix of this level.
        std::vector<int> next_twists;
        next_twists.reserve(g.size());
        PolyMatrix<K> mat = PolyMatrix<K>::zero(ctx, ord, static_cast<int>(cur_twists.size()),
                                                static_cast<int>(g.size()));
        for (std::size_t c = 0; c < g.size(); ++c) {
            int d = 0;
            if (!g[c].is_homogeneous(cur_twists, &d))
                throw std::invalid_argument("resolution requires homogeneous input");
            next_twists.push_back(d);
            for (const auto& t : g[c].terms())
                mat.e[static_cast<std::size_t>(t.comp)][c] =
                    mat.e[static_cast<std::size_t>(t.comp)][c] +
                    Polynomial<K>::term(ctx, ord, t.m, t.c);
        }
        res.twists.push_back(next_twists);
        res.maps.push_back(std::move(mat));

        // Syzygies of g under the Schreyer order it induces.
        std::vector<Monomial> lt_m;
        std::vector<int> lt_c;
        lt_m.reserve(g.size());
        lt_c.reserve(g.size());
        for (const auto& p : g) {
            lt_m.push_back(p.leading_term().m);
            lt_c.push_back(p.leading_term().comp);
        }
        ModOrderPtr schreyer = ModuleOrder::schreyer(cur_ord, lt_m, lt_c);

        std::vector<ModPoly<K>> syz;
        int r = static_cast<int>(g.size());
        for (int i = 0; i < r; ++i) {
            // Candidate partners with the same leading component; keep only
            // those whose quotient monomial is a minimal generator of the
            // lead-term colon ideal.
            std::vector<std::pair<Monomial, int>> cand;
            for (int j = i + 1; j < r; ++j) {
                if (lt_c[static_cast<std::size_t>(j)] != lt_c[static_cast<std::size_t>(i)])
                    continue;
                Monomial l = lcm(lt_m[static_cast<std::size_t>(i)],
                                 lt_m[static_cast<std::size_t>(j)]);
                cand.push_back({l.divided_by(lt_m[static_cast<std::size_t>(i)]), j});
            }
            for (std::size_t a = 0; a < cand.size(); ++a) {
                bool drop = false;
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (a == b) continue;
                    if (cand[b].first == cand[a].first) {
                        if (b < a) drop = true;
                    } else if (cand[b].first.divides(cand[a].first)) {
                        drop = true;
                    }
                }
                if (drop) continue;
                int j = cand[a].second;
                ModPoly<K> s = s_vector(g[static_cast<std::size_t>(i)],
                                        g[static_cast<std::size_t>(j)]);
                ModDivision<K> div = divide_record(s, g, ord);
                if (!div.remainder.is_zero())
                    throw std::logic_error("syzygy S-vector failed to reduce to zero");
                std::vector<ModTerm<K>> ts;
                const Monomial& l_over_i = cand[a].first;
                Monomial l_over_j =
                    lcm(lt_m[static_cast<std::size_t>(i)], lt_m[static_cast<std::size_t>(j)])
                        .divided_by(lt_m[static_cast<std::size_t>(j)]);
                ts.push_back({l_over_i, i, field_ops<K>::one(*ctx)});
                ts.push_back({l_over_j, j, field_ops<K>::neg(*ctx, field_ops<K>::one(*ctx))});
                for (int v = 0; v < r; ++v)
                    for (const auto& qt : div.quotients[static_cast<std::size_t>(v)].terms())
                        ts.push_back({qt.m, v, field_ops<K>::neg(*ctx, qt.c)});
                syz.push_back(ModPoly<K>::from_terms(ctx, schreyer, r, std::move(ts)));
            }
        }
        if (syz.empty()) return res;
        g = std::move(syz);
        cur_ord = schreyer;
        cur_twists = res.twists.back();
    }
    throw std::logic_error("resolution exceeded the level cap");
}

// Cancels unit entries by a Schur complement on the map that carries them;
// the neighbouring maps only lose the corresponding row/column.
template <class K>
void minimize_complex(GradedComplex<K>& res) {
    const RingPtr& ctx = res.ctx;
    for (std::size_t k = 0; k < res.maps.size(); ++k) {
        for (;;) {
            PolyMatrix<K>& B = res.maps[k];
            int pr = -1, pc = -1;
            for (int r = 0; r < B.nrows && pr < 0; ++r)
                for (int c = 0; c < B.ncols; ++c) {
                    const Polynomial<K>& p =
                        B.e[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    if (!p.is_zero() && p.degree() == 0) {
                        pr = r;
                        pc = c;
                        break;
                    }
                }
            if (pr < 0) break;
            K u = B.e[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)]
                      .leading_coefficient();
            // Schur complement over the pivot.
            for (int i = 0; i < B.nrows; ++i) {
                if (i == pr) continue;
                const Polynomial<K>& bic =
                    B.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)];
                if (bic.is_zero()) continue;
                Polynomial<K> factor = bic.scaled(field_ops<K>::inv(*ctx, u));
                for (int j = 0; j < B.ncols; ++j) {
                    if (j == pc) continue;
                    const Polynomial<K>& brj =
                        B.e[static_cast<std::size_t>(pr)][static_cast<std::size_t>(j)];
                    if (brj.is_zero()) continue;
                    B.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        B.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        factor * brj;
                }
            }
            // Delete row pr and column pc of B.
            B.e.erase(B.e.begin() + pr);
            --B.nrows;
            for (auto& row : B.e) row.erase(row.begin() + pc);
            --B.ncols;
            res.twists[k].erase(res.twists[k].begin() + pr);
            res.twists[k + 1].erase(res.twists[k + 1].begin() + pc);
            // The next map loses the row of the cancelled source generator.
            if (k + 1 < res.maps.size()) {
                res.maps[k + 1].e.erase(res.maps[k + 1].e.begin() + pc);
                --res.maps[k + 1].nrows;
            }
            // The previous map loses the column of the cancelled target
            // generator (that column is zero once the complex identity holds).
            if (k > 0) {
                for (auto& row : res.maps[k - 1].e) row.erase(row.begin() + pr);
                --res.maps[k - 1].ncols;
            }
        }
    }
    // Trim empty tail levels.
    while (res.twists.size() > 1 && res.twists.back().empty()) {
        res.twists.pop_back();
        res.maps.pop_back();
    }
    res.validate_graded();
}

// Minimal free resolution of F_0/im(relation columns).
template <class K>
GradedComplex<K> resolve_presented(const RingPtr& ctx, const MonomialOrder& ord,
                                   const std::vector<int>& f0_twists,
                                   const std::vector<std::vector<Polynomial<K>>>& rel_cols) {
    GradedComplex<K> res = schreyer_resolution<K>(ctx, ord, f0_twists, rel_cols);
    minimize_complex(res);
    return res;
}

// Minimal free resolution of R/I.
template <class K>
GradedComplex<K> resolve_quotient(const RingPtr& ctx, const MonomialOrder& ord,
                                  const std::vector<Polynomial<K>>& ideal_gens) {
    std::vector<std::vector<Polynomial<K>>> cols;
    for (const auto& f : ideal_gens)
        if (!f.is_zero()) cols.push_back({f});
    return resolve_presented<K>(ctx, ord, {0}, cols);
}

// Minimal free resolution of the ideal itself: the R/I resolution with the
// leading R summand stripped and homological indices shifted down by one.
template <class K>
GradedComplex<K> resolution_of_ideal(const RingPtr& ctx, const MonomialOrder& ord,
                                     const std::vector<Polynomial<K>>& ideal_gens) {
    GradedComplex<K> q = resolve_quotient<K>(ctx, ord, ideal_gens);
    GradedComplex<K> res;
    res.ctx = q.ctx;
    res.ord = q.ord;
    if (q.length() == 0)
        throw std::invalid_argument("zero ideal has no free resolution as a module");
    res.twists.assign(q.twists.begin() + 1, q.twists.end());
    res.maps.assign(q.maps.begin() + 1, q.maps.end());
    return res;
}

// Graded Betti numbers of a minimal complex.
struct BettiTable {
    std::vector<std::map<int, int>> by_level;  // by_level[j][d] = multiplicity

    int length() const { return static_cast<int>(by_level.size()) - 1; }

    // Rows "j: {degree: multiplicity}", ascending j, ascending degree.
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t j = 0; j < by_level.size(); ++j) {
            os << j << ": {";
            bool first = true;
            for (const auto& [d, m] : by_level[j]) {
                if (!first) os << ", ";
                first = false;
                os << d << ": " << m;
            }
            os << "}\n";
        }
        return os.str();
    }

    // max over levels j and degrees d of d - j.
    int regularity() const {
        bool seen = false;
        int reg = 0;
        for (std::size_t j = 0; j < by_level.size(); ++j)
            for (const auto& [d, m] : by_level[j]) {
                (void)m;
                int v = d - static_cast<int>(j);
                if (!seen || v > reg) reg = v;
                seen = true;
            }
        if (!seen) throw std::logic_error("regularity of the zero module");
        return reg;
    }

    bool operator==(const BettiTable& o) const { return by_level == o.by_level; }
    bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

template <class K>
BettiTable betti_table(const GradedComplex<K>& res) {
    BettiTable b;
    b.by_level.resize(res.twists.size());
    for (std::size_t j = 0; j < res.twists.size(); ++j)
        for (int d : res.twists[j]) ++b.by_level[j][d];
    return b;
}

// Regularity of the module resolved by a minimal complex.
template <class K>
int regularity_of_complex(const GradedComplex<K>& res) {
    return betti_table(res).regularity();
}

// reg(R/I); throws on the unit ideal (zero module).
template <class K>
int regularity_of_quotient(const RingPtr& ctx, const MonomialOrder& ord,
                           const std::vector<Polynomial<K>>& ideal_gens) {
    return regularity_of_complex(resolve_quotient<K>(ctx, ord, ideal_gens));
}

// reg(I) = reg(R/I) + 1, realized by resolving the ideal as a module.
template <class K>
int regularity_of_ideal(const RingPtr& ctx, const MonomialOrder& ord,
                        const std::vector<Polynomial<K>>& ideal_gens) {
    return regularity_of_complex(resolution_of_ideal<K>(ctx, ord, ideal_gens));
}

// pd of the module resolved by a minimal complex.
template <class K>
int projective_dimension(const GradedComplex<K>& res) {
    return res.length();
}

// depth(R/I) = #vars - pd(R/I), by Auslander-Buchsbaum.
template <class K>
int depth_of_quotient(const RingPtr& ctx, const MonomialOrder& ord,
                      const std::vector<Polynomial<K>>& ideal_gens) {
    GradedComplex<K> res = resolve_quotient<K>(ctx, ord, ideal_gens);
    return ctx->nvars() - res.length();
}

}  // namespace cmreg
