#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace denslab {

// Half-open [lo, hi). The closed interval notation used throughout the
// experiment configs converts at the boundary: {a..b} == [a, b+1).
struct Interval {
    uint64_t lo = 0;
    uint64_t hi = 0;

    Interval() = default;
    Interval(uint64_t lo_, uint64_t hi_) : lo(lo_), hi(hi_) {
        if (lo >= hi) throw std::invalid_argument("Interval: lo must be < hi");
    }
    static Interval closed(uint64_t first, uint64_t last) { return Interval(first, last + 1); }

    uint64_t size() const { return hi - lo; }
    bool contains(uint64_t x) const { return x >= lo && x < hi; }
    bool operator==(const Interval&) const = default;
};

// Sorted, pairwise disjoint, non-adjacent intervals. Canonical form: the
// same set of integers has exactly one representation.
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> normalized_intervals);

    // Sorts and merges arbitrary (possibly overlapping/adjacent) input.
    static IntervalUnion normalize(std::span<const Interval> raw);
    static IntervalUnion normalize(std::initializer_list<Interval> raw);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    uint64_t cardinality() const;
    uint64_t min() const; // throws on empty
    uint64_t max_excl() const;

    bool contains(uint64_t x) const;
    // |S ∩ [1, x]|
    uint64_t count_leq(uint64_t x) const;

    bool operator==(const IntervalUnion&) const = default;

  private:
    std::vector<Interval> intervals_;
};

IntervalUnion set_union(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion set_difference(const IntervalUnion& u, const IntervalUnion& v);
IntervalUnion set_intersection(const IntervalUnion& u, const IntervalUnion& v);

} // namespace denslab
