#pragma once
// RingContext: a named polynomial ring k[x_1..x_n] where k is QQ or a prime field.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/field.hpp"

namespace cmreg {

// Compile-time cap on the number of ring variables; lets monomials store
// exponents inline.  Covers every ring in scope (base rings plus a couple of
// auxiliary elimination/tag variables).
inline constexpr int kMaxVars = 12;

namespace detail {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

class RingContext {
public:
    RingContext(std::vector<std::string> vars, long characteristic)
        : vars_(std::move(vars)), char_(characteristic) {
        if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
            throw std::invalid_argument("RingContext: variable count must be in [1, " +
                                        std::to_string(kMaxVars) + "]");
        for (const auto& v : vars_) {
            if (v.empty()) throw std::invalid_argument("RingContext: empty variable name");
        }
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("RingContext: duplicate variable " + vars_[i]);
        if (char_ != 0) {
            if (!detail::is_prime(char_) || char_ >= (1L << 31))
                throw std::invalid_argument("RingContext: characteristic must be 0 or a prime < 2^31");
        }
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    long characteristic() const { return char_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.char_ == b.char_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
    long char_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> vars, long characteristic = 0) {
    return std::make_shared<const RingContext>(std::move(vars), characteristic);
}

// New ring with extra variables prepended (used by elimination-style tricks,
// which put the variables to eliminate in the leading block).
inline RingPtr ring_with_prefix(const RingPtr& R, const std::vector<std::string>& prefix) {
    std::vector<std::string> vars = prefix;
    vars.insert(vars.end(), R->vars().begin(), R->vars().end());
    return make_ring(std::move(vars), R->characteristic());
}

// New ring with extra variables appended (homogenization variable goes last).
inline RingPtr ring_with_suffix(const RingPtr& R, const std::vector<std::string>& suffix) {
    std::vector<std::string> vars = R->vars();
    vars.insert(vars.end(), suffix.begin(), suffix.end());
    return make_ring(std::move(vars), R->characteristic());
}

inline void require_same_ring(const RingContext& a, const RingContext& b) {
    if (&a == &b) return;
    if (a != b) throw std::invalid_argument("operands live in different rings");
}

// --- prime-field ops (need the context's modulus) ---

inline Zp field_ops<Zp>::from_long(const RingContext& R, long v) {
    return Zp{detail::mod_pos(v, R.characteristic())};
}
inline Zp field_ops<Zp>::add(const RingContext& R, Zp a, Zp b) {
    std::int64_t s = a.v + b.v;
    long p = R.characteristic();
    return Zp{s >= p ? s - p : s};
}
inline Zp field_ops<Zp>::sub(const RingContext& R, Zp a, Zp b) {
    std::int64_t s = a.v - b.v;
    return Zp{s < 0 ? s + R.characteristic() : s};
}
inline Zp field_ops<Zp>::neg(const RingContext& R, Zp a) {
    return a.v == 0 ? a : Zp{R.characteristic() - a.v};
}
inline Zp field_ops<Zp>::mul(const RingContext& R, Zp a, Zp b) {
    return Zp{(a.v * b.v) % R.characteristic()};
}
inline Zp field_ops<Zp>::inv(const RingContext& R, Zp a) {
    return Zp{detail::mod_inverse(a.v, R.characteristic())};
}
inline Zp field_ops<Zp>::div(const RingContext& R, Zp a, Zp b) {
    if (b.v == 0) throw std::domain_error("division by zero coefficient");
    return mul(R, a, inv(R, b));
}

}  // namespace cmreg
