#pragma once
// Monomial: an exponent vector with cached total degree, stored inline.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "cmreg/ring.hpp"

namespace cmreg {

class Monomial {
public:
    Monomial() = default;

    explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
        if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("Monomial: bad nvars");
    }

    static Monomial one(int nvars) { return Monomial(nvars); }

    static Monomial var(int nvars, int i, unsigned e = 1) {
        Monomial m(nvars);
        m.set(i, e);
        return m;
    }

    int nvars() const { return n_; }
    unsigned deg() const { return deg_; }
    unsigned operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    void set(int i, unsigned e) {
        if (i < 0 || i >= n_) throw std::out_of_range("Monomial::set");
        if (e > 0xffffu) throw std::overflow_error("Monomial exponent overflow");
        deg_ += e - e_[static_cast<std::size_t>(i)];
        e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    }

    bool is_one() const { return deg_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            unsigned e = a.e_[static_cast<std::size_t>(i)] + b.e_[static_cast<std::size_t>(i)];
            if (e > 0xffffu) throw std::overflow_error("Monomial exponent overflow");
            r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (deg_ > b.deg_) return false;
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > b.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    // this / b; requires b.divides(*this).
    Monomial divided_by(const Monomial& b) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) {
            if (b.e_[static_cast<std::size_t>(i)] > e_[static_cast<std::size_t>(i)])
                throw std::domain_error("Monomial division not exact");
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::uint16_t>(e_[static_cast<std::size_t>(i)] - b.e_[static_cast<std::size_t>(i)]);
        }
        r.deg_ = deg_ - b.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        unsigned d = 0;
        for (int i = 0; i < a.n_; ++i) {
            std::uint16_t e = std::max(a.e_[static_cast<std::size_t>(i)], b.e_[static_cast<std::size_t>(i)]);
            r.e_[static_cast<std::size_t>(i)] = e;
            d += e;
        }
        r.deg_ = d;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n_; ++i)
            if (a.e_[static_cast<std::size_t>(i)] != 0 && b.e_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.e_[static_cast<std::size_t>(i)] != b.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    std::uint32_t deg_ = 0;
};

}  // namespace cmreg
