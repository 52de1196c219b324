#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "denslab/fixpoint.hpp"

namespace denslab {

// Raised whenever a decision would depend on digits beyond the tracked
// precision (arc endpoint too close to a sample point, k too large, ...).
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Irrational rotation number in (0,1), held as a 256-bit fixed-point value
// plus the continued-fraction data that produced it. Presets are quadratic
// irrationals whose convergents have closed forms usable as spot checks.
class ThetaValue {
  public:
    enum class Preset { Golden, Sqrt2m1, Custom };

    static ThetaValue golden();
    static ThetaValue sqrt2m1();
    // theta = [0; q1, q2, ...]; the tail is truncated once convergent
    // denominators exceed the precision budget, and the truncation error
    // bound is tracked.
    static ThetaValue custom(std::vector<uint64_t> partial_quotients);

    Preset preset() const { return preset_; }
    std::string name() const;
    static ThetaValue from_name(const std::string& name);

    const Fix256& fixed() const { return fixed_; }
    double value() const { return fixed_.to_double(); }
    int precision_bits() const { return 256; }
    // log2 of the guaranteed bound on |stored - true theta| (negative).
    double error_log2() const { return error_log2_; }

    // First `count` convergents p/q after the trivial 0/1.
    std::vector<std::pair<uint64_t, uint64_t>> convergents(size_t count) const;

    // ||k*theta||: distance from k*theta to the nearest integer.
    double norm_dist(uint64_t k) const;
    Fix256 frac_mul(uint64_t k) const;

  private:
    ThetaValue(Preset p, Fix256 f, std::vector<uint64_t> cf, double err_log2)
        : preset_(p), fixed_(f), quotients_(std::move(cf)), error_log2_(err_log2) {}

    Preset preset_;
    Fix256 fixed_;
    std::vector<uint64_t> quotients_; // periodic part for presets, literal for custom
    double error_log2_;
};

} // namespace denslab
