#include "denslab/schedule.hpp"

#include <limits>

namespace denslab {

GrowthSchedule::GrowthSchedule(Law law, std::vector<uint64_t> cps, double ratio)
    : law_(law), checkpoints_(std::move(cps)), ratio_(ratio) {
    if (checkpoints_.size() < 2) throw std::invalid_argument("GrowthSchedule: depth must be >= 2");
    for (size_t i = 1; i < checkpoints_.size(); ++i)
        if (checkpoints_[i] <= checkpoints_[i - 1])
            throw std::invalid_argument("GrowthSchedule: checkpoints must be strictly increasing");
}

GrowthSchedule GrowthSchedule::geometric(double ratio, size_t depth, uint64_t seed_value) {
    if (ratio < 2.0) throw std::invalid_argument("geometric schedule: ratio must be >= 2");
    if (seed_value == 0) throw std::invalid_argument("geometric schedule: seed must be >= 1");
    constexpr uint64_t kMax = uint64_t(1) << 62;
    std::vector<uint64_t> cps;
    cps.reserve(depth);
    uint64_t x = seed_value;
    for (size_t n = 0; n < depth; ++n) {
        cps.push_back(x);
        if (n + 1 == depth) break;
        double next = std::round(ratio * static_cast<double>(x));
        if (next > static_cast<double>(kMax))
            throw std::overflow_error("geometric schedule: checkpoint exceeds 2^62");
        x = static_cast<uint64_t>(next);
    }
    return GrowthSchedule(Law::Geometric, std::move(cps), ratio);
}

GrowthSchedule GrowthSchedule::squared_exponent(uint64_t base, size_t depth) {
    if (base < 2) throw std::invalid_argument("squared_exponent schedule: base must be >= 2");
    std::vector<uint64_t> cps;
    const long double lim = 9.2e18L;
    for (size_t n = 1; n <= depth; ++n) {
        long double v = std::pow(static_cast<long double>(base),
                                 static_cast<long double>(n) * static_cast<long double>(n));
        if (v > lim) break; // depth capped at the 64-bit range
        uint64_t x = 1;
        for (size_t k = 0; k < n * n; ++k) x *= base;
        cps.push_back(x);
    }
    if (cps.size() < 2)
        throw std::invalid_argument("squared_exponent schedule: fewer than 2 representable checkpoints");
    return GrowthSchedule(Law::SquaredExponent, std::move(cps), 0.0);
}

GrowthSchedule GrowthSchedule::explicit_list(std::vector<uint64_t> checkpoints) {
    return GrowthSchedule(Law::Explicit, std::move(checkpoints), 0.0);
}

std::string GrowthSchedule::law_name() const {
    switch (law_) {
        case Law::Geometric: return "geometric";
        case Law::SquaredExponent: return "squared_exponent";
        case Law::Explicit: return "explicit";
    }
    return "?";
}

} // namespace denslab
