#pragma once
// Coefficient fields: exact rationals (GMP) and prime fields with runtime modulus.
//
// Polynomial code is templated on the coefficient type K and performs all
// arithmetic through field_ops<K>, passing the ambient ring context so that
// prime-field operations can reach their modulus.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cmreg {

class RingContext;

// Rational coefficients, characteristic 0.
using QQ = mpq_class;

// Prime-field coefficient: a representative in [0, p).  The modulus lives in
// the RingContext, not here, so the type stays a trivially copyable int64.
struct Zp {
    std::int64_t v = 0;
    friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
    friend bool operator!=(Zp a, Zp b) { return a.v != b.v; }
};

namespace detail {

inline std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid.  p prime, a != 0 mod p.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return mod_pos(t, p);
}

}  // namespace detail

template <class K>
struct field_ops;

template <>
struct field_ops<QQ> {
    static QQ zero(const RingContext&) { return QQ(0); }
    static QQ one(const RingContext&) { return QQ(1); }
    static QQ from_long(const RingContext&, long v) { return QQ(v); }
    static bool is_zero(const QQ& a) { return sgn(a) == 0; }
    static bool is_one(const QQ& a) { return a == 1; }
    static QQ add(const RingContext&, const QQ& a, const QQ& b) { return a + b; }
    static QQ sub(const RingContext&, const QQ& a, const QQ& b) { return a - b; }
    static QQ neg(const RingContext&, const QQ& a) { return -a; }
    static QQ mul(const RingContext&, const QQ& a, const QQ& b) { return a * b; }
    static QQ div(const RingContext&, const QQ& a, const QQ& b) {
        if (is_zero(b)) throw std::domain_error("division by zero coefficient");
        return a / b;
    }
    static QQ inv(const RingContext& R, const QQ& a) { return div(R, QQ(1), a); }
    static std::string to_string(const QQ& a) { return a.get_str(); }
};

// Declared here, defined after RingContext (ring.hpp) which supplies the modulus.
template <>
struct field_ops<Zp> {
    static Zp zero(const RingContext&) { return Zp{0}; }
    static Zp one(const RingContext&) { return Zp{1}; }
    static Zp from_long(const RingContext& R, long v);
    static bool is_zero(const Zp& a) { return a.v == 0; }
    static bool is_one(const Zp& a) { return a.v == 1; }
    static Zp add(const RingContext& R, Zp a, Zp b);
    static Zp sub(const RingContext& R, Zp a, Zp b);
    static Zp neg(const RingContext& R, Zp a);
    static Zp mul(const RingContext& R, Zp a, Zp b);
    static Zp div(const RingContext& R, Zp a, Zp b);
    static Zp inv(const RingContext& R, Zp a);
    static std::string to_string(const Zp& a) { return std::to_string(a.v); }
};

}  // namespace cmreg
