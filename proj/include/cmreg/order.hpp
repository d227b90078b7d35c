#pragma once
// Monomial orders: lex, graded reverse lex, degree-compatible block
// elimination orders, and weighted orders.

#include <cstdint>
#include <string>
#include <vector>

#include "cmreg/monomial.hpp"

namespace cmreg {

class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block, Weighted };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0, {}); }

    // Eliminates the first `split` variables: grevlex on the leading block,
    // ties broken by grevlex on the rest.  Any monomial touching the leading
    // block beats any monomial that does not, which is the elimination property.
    static MonomialOrder block_elim(int split) { return MonomialOrder(Kind::Block, split, {}); }

    // Weighted degree first, ties broken by grevlex.
    static MonomialOrder weighted(std::vector<long> w) {
        return MonomialOrder(Kind::Weighted, 0, std::move(w));
    }

    Kind kind() const { return kind_; }
    int split() const { return split_; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex:
                return cmp_lex(a, b, 0, a.nvars());
            case Kind::GrevLex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case Kind::Block: {
                int r = cmp_grevlex(a, b, 0, split_);
                if (r != 0) return r;
                return cmp_grevlex(a, b, split_, a.nvars());
            }
            case Kind::Weighted: {
                long wa = 0, wb = 0;
                for (int i = 0; i < a.nvars(); ++i) {
                    wa += weights_[static_cast<std::size_t>(i)] * static_cast<long>(a[i]);
                    wb += weights_[static_cast<std::size_t>(i)] * static_cast<long>(b[i]);
                }
                if (wa != wb) return wa > wb ? 1 : -1;
                return cmp_grevlex(a, b, 0, a.nvars());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // True when the order refines total degree, so that leading terms of
    // homogeneous polynomials determine degree-wise structure.
    bool is_degree_compatible() const { return kind_ == Kind::GrevLex; }

    std::string key() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::GrevLex: return "grevlex";
            case Kind::Block: return "block:" + std::to_string(split_);
            case Kind::Weighted: {
                std::string s = "weighted:";
                for (long w : weights_) s += std::to_string(w) + ",";
                return s;
            }
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.split_ == b.split_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
    MonomialOrder(Kind k, int split, std::vector<long> w)
        : kind_(k), split_(split), weights_(std::move(w)) {}

    static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }

    static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
        unsigned da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    int split_;
    std::vector<long> weights_;
};

}  // namespace cmreg
