#pragma once

#include <array>
#include <cstdint>

namespace denslab {

// Unsigned fixed-point fraction in [0,1) with 256 bits: value = X / 2^256.
// Addition wraps mod 2^256, which is exactly arithmetic mod 1 on the circle.
struct Fix256 {
    // little-endian limbs
    std::array<uint64_t, 4> limb{0, 0, 0, 0};

    static Fix256 zero() { return Fix256{}; }

    friend Fix256 operator+(Fix256 a, const Fix256& b) {
        unsigned __int128 carry = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 s = (unsigned __int128)a.limb[i] + b.limb[i] + carry;
            a.limb[i] = (uint64_t)s;
            carry = s >> 64;
        }
        return a;
    }
    friend Fix256 operator-(Fix256 a, const Fix256& b) {
        unsigned __int128 borrow = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 d = (unsigned __int128)a.limb[i] - b.limb[i] - borrow;
            a.limb[i] = (uint64_t)d;
            borrow = (d >> 64) & 1;
        }
        return a;
    }
    Fix256& operator+=(const Fix256& b) { *this = *this + b; return *this; }

    friend bool operator<(const Fix256& a, const Fix256& b) {
        for (int i = 3; i >= 0; --i) {
            if (a.limb[i] != b.limb[i]) return a.limb[i] < b.limb[i];
        }
        return false;
    }
    friend bool operator==(const Fix256& a, const Fix256& b) { return a.limb == b.limb; }
    friend bool operator<=(const Fix256& a, const Fix256& b) { return !(b < a); }

    bool is_zero() const { return limb[0] == 0 && limb[1] == 0 && limb[2] == 0 && limb[3] == 0; }

    // floor(n * this) mod 2^256 interpreted as frac(n * value); exact mod-1
    // arithmetic on the stored approximation.
    Fix256 mul_u64(uint64_t n) const {
        Fix256 r;
        unsigned __int128 carry = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 p = (unsigned __int128)limb[i] * n + carry;
            r.limb[i] = (uint64_t)p;
            carry = p >> 64;
        }
        return r; // overflow beyond limb 3 is the integer part, dropped mod 1
    }

    // Circular distance to b, as a Fix256 magnitude <= 1/2.
    Fix256 circle_dist(const Fix256& b) const {
        Fix256 d1 = *this - b;
        Fix256 d2 = b - *this;
        return d1 < d2 ? d1 : d2;
    }

    double to_double() const {
        const double w = 18446744073709551616.0; // 2^64
        return ((double)limb[1] / w + (double)limb[2]) / w / w + (double)limb[3] / w;
    }
};

// 2^-128: the decision guard radius used by arc membership.
inline Fix256 fix256_guard() {
    Fix256 g;
    g.limb[2] = 1;
    return g;
}

} // namespace denslab
