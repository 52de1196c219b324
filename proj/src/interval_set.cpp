#include "denslab/interval_set.hpp"

#include <algorithm>

namespace denslab {

IntervalUnion::IntervalUnion(std::vector<Interval> normalized_intervals)
    : intervals_(std::move(normalized_intervals)) {
    for (size_t i = 0; i < intervals_.size(); ++i) {
        if (intervals_[i].lo >= intervals_[i].hi)
            throw std::invalid_argument("IntervalUnion: malformed interval");
        if (i > 0 && intervals_[i].lo <= intervals_[i - 1].hi)
            throw std::invalid_argument("IntervalUnion: intervals not sorted/disjoint");
    }
}

IntervalUnion IntervalUnion::normalize(std::span<const Interval> raw) {
    std::vector<Interval> v;
    v.reserve(raw.size());
    for (const Interval& iv : raw) {
        if (iv.lo >= iv.hi) throw std::invalid_argument("normalize: interval with lo >= hi");
        v.push_back(iv);
    }
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (const Interval& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    IntervalUnion u;
    u.intervals_ = std::move(out);
    return u;
}

IntervalUnion IntervalUnion::normalize(std::initializer_list<Interval> raw) {
    return normalize(std::span<const Interval>(raw.begin(), raw.size()));
}

uint64_t IntervalUnion::cardinality() const {
    uint64_t n = 0;
    for (const Interval& iv : intervals_) n += iv.size();
    return n;
}

uint64_t IntervalUnion::min() const {
    if (empty()) throw std::logic_error("min of empty set");
    return intervals_.front().lo;
}

uint64_t IntervalUnion::max_excl() const {
    if (empty()) throw std::logic_error("max of empty set");
    return intervals_.back().hi;
}

bool IntervalUnion::contains(uint64_t x) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](uint64_t v, const Interval& iv) { return v < iv.lo; });
    if (it == intervals_.begin()) return false;
    --it;
    return x < it->hi;
}

uint64_t IntervalUnion::count_leq(uint64_t x) const {
    if (x == 0) return 0;
    uint64_t n = 0;
    for (const Interval& iv : intervals_) {
        if (iv.lo > x) break;
        uint64_t hi = std::min(iv.hi, x + 1);
        uint64_t lo = std::max<uint64_t>(iv.lo, 1); // members are counted from 1
        if (hi > lo) n += hi - lo;
    }
    return n;
}

IntervalUnion set_union(const IntervalUnion& u, const IntervalUnion& v) {
    std::vector<Interval> all = u.intervals();
    all.insert(all.end(), v.intervals().begin(), v.intervals().end());
    return IntervalUnion::normalize(all);
}

IntervalUnion set_difference(const IntervalUnion& u, const IntervalUnion& v) {
    std::vector<Interval> out;
    const auto& vs = v.intervals();
    size_t j = 0;
    for (Interval iv : u.intervals()) {
        uint64_t cur = iv.lo;
        while (j < vs.size() && vs[j].hi <= cur) ++j;
        size_t k = j;
        while (cur < iv.hi) {
            if (k >= vs.size() || vs[k].lo >= iv.hi) {
                out.push_back(Interval(cur, iv.hi));
                break;
            }
            if (vs[k].lo > cur) out.push_back(Interval(cur, vs[k].lo));
            cur = std::max(cur, vs[k].hi);
            ++k;
        }
    }
    IntervalUnion r;
    return IntervalUnion::normalize(out);
}

IntervalUnion set_intersection(const IntervalUnion& u, const IntervalUnion& v) {
    std::vector<Interval> out;
    const auto& a = u.intervals();
    const auto& b = v.intervals();
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        uint64_t lo = std::max(a[i].lo, b[j].lo);
        uint64_t hi = std::min(a[i].hi, b[j].hi);
        if (lo < hi) out.push_back(Interval(lo, hi));
        if (a[i].hi < b[j].hi) ++i; else ++j;
    }
    return IntervalUnion::normalize(out);
}

} // namespace denslab
