#include "denslab/window_set.hpp"

#include <algorithm>
#include <bit>

namespace denslab {

uint64_t WindowSet::count() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

uint64_t WindowSet::count_leq(uint64_t x) const {
    if (x == 0 || x < base_) return 0;
    if (x - base_ >= len_) throw std::out_of_range("count_leq: x outside window");
    uint64_t last = x - base_; // inclusive bit index
    uint64_t full = (last + 1) >> 6;
    uint64_t n = 0;
    for (uint64_t i = 0; i < full; ++i) n += std::popcount(words_[i]);
    uint64_t rem = (last + 1) & 63;
    if (rem) n += std::popcount(words_[full] & ((uint64_t(1) << rem) - 1));
    // base_ == 0 would let bit 0 represent the integer 0, which [1,x] excludes
    if (base_ == 0 && ((words_[0] & 1) != 0)) n -= 1;
    return n;
}

std::vector<uint64_t> WindowSet::to_vector() const {
    std::vector<uint64_t> out;
    for (uint64_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            unsigned b = std::countr_zero(w);
            out.push_back(base_ + wi * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

uint64_t WindowSet::next_member(uint64_t x) const {
    if (x >= end()) return end();
    uint64_t i = x - base_;
    uint64_t wi = i >> 6;
    uint64_t w = words_[wi] & (~uint64_t(0) << (i & 63));
    while (true) {
        if (w) {
            uint64_t pos = base_ + wi * 64 + std::countr_zero(w);
            return pos < end() ? pos : end();
        }
        if (++wi >= words_.size()) return end();
        w = words_[wi];
    }
}

bool WindowSet::prev_member(uint64_t x, uint64_t& out) const {
    if (x < base_) return false;
    if (x >= end()) x = end() - 1;
    uint64_t i = x - base_;
    uint64_t wi = i >> 6;
    uint64_t mask = (i & 63) == 63 ? ~uint64_t(0) : ((uint64_t(1) << ((i & 63) + 1)) - 1);
    uint64_t w = words_[wi] & mask;
    while (true) {
        if (w) {
            out = base_ + wi * 64 + (63 - std::countl_zero(w));
            return true;
        }
        if (wi == 0) return false;
        w = words_[--wi];
    }
}

WindowSet materialize(const IntervalUnion& u, uint64_t base, uint64_t window_len) {
    WindowSet ws(base, window_len);
    for (const Interval& iv : u.intervals()) {
        uint64_t lo = std::max(iv.lo, base);
        uint64_t hi = std::min(iv.hi, base + window_len);
        if (lo >= hi) continue;
        for (uint64_t i = lo - base, e = hi - base; i < e;) {
            uint64_t wi = i >> 6;
            uint64_t start = i & 63;
            uint64_t span = std::min<uint64_t>(64 - start, e - i);
            uint64_t mask = span == 64 ? ~uint64_t(0) : (((uint64_t(1) << span) - 1) << start);
            ws.words()[wi] |= mask;
            i += span;
        }
    }
    return ws;
}

} // namespace denslab
