#pragma once

#include <cstdint>

namespace denslab {

// splitmix64 finalizer; full-period mixing of a 64-bit counter.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ b); }

// Per-block substream key. Keeping a block's draws a pure function of
// (seed, block, element) makes generation order- and thread-independent.
inline uint64_t block_seed(uint64_t seed, uint64_t block_index) {
    return mix64(seed, 0x417e0fa5b5e7e255ULL ^ block_index);
}

// Inclusion threshold for probability p: element kept iff draw < threshold.
// p >= 1 must keep everything, so it is handled by the caller via keep_all.
struct BernoulliGate {
    uint64_t threshold = 0;
    bool keep_all = false;

    static BernoulliGate from_probability(double p) {
        BernoulliGate g;
        if (p >= 1.0) {
            g.keep_all = true;
        } else if (p > 0.0) {
            g.threshold = static_cast<uint64_t>(p * 18446744073709551616.0);
        }
        return g;
    }

    bool keeps(uint64_t key, uint64_t element) const {
        if (keep_all) return true;
        return mix64(key, element) < threshold;
    }
};

} // namespace denslab
