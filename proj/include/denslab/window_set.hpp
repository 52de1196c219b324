#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "denslab/interval_set.hpp"

namespace denslab {

// Characteristic bit vector of a set restricted to [base, base+len).
// Bit i set <=> integer base+i is a member. Queries outside the window
// are contract violations and throw.
class WindowSet {
  public:
    WindowSet() = default;
    WindowSet(uint64_t base, uint64_t len)
        : base_(base), len_(len), words_((len + 63) / 64, 0) {
        if (len == 0) throw std::invalid_argument("WindowSet: window_len must be >= 1");
    }

    uint64_t base() const { return base_; }
    uint64_t len() const { return len_; }
    uint64_t end() const { return base_ + len_; }

    bool in_window(uint64_t x) const { return x >= base_ && x - base_ < len_; }

    bool test(uint64_t x) const {
        check_window(x);
        uint64_t i = x - base_;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(uint64_t x) {
        check_window(x);
        uint64_t i = x - base_;
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(uint64_t x) {
        check_window(x);
        uint64_t i = x - base_;
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    uint64_t count() const;
    // |S ∩ [1, x]|; requires x < base+len.
    uint64_t count_leq(uint64_t x) const;
    // Members as explicit integers (small windows only).
    std::vector<uint64_t> to_vector() const;

    // Next member >= x, or end() if none (x must be in window or == end()).
    uint64_t next_member(uint64_t x) const;
    // Previous member <= x, or base()-1 sentinel semantics via found flag.
    bool prev_member(uint64_t x, uint64_t& out) const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    bool operator==(const WindowSet&) const = default;

  private:
    void check_window(uint64_t x) const {
        if (!in_window(x)) throw std::out_of_range("WindowSet: query outside window");
    }

    uint64_t base_ = 0;
    uint64_t len_ = 0;
    std::vector<uint64_t> words_;
};

// Bit i set <=> base+i ∈ u.
WindowSet materialize(const IntervalUnion& u, uint64_t base, uint64_t window_len);

} // namespace denslab
