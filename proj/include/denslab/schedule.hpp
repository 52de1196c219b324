#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace denslab {

// Strictly increasing checkpoint sequence with a named growth law.
// The squared-exponent law base^(n^2) is the literal schedule from the
// source constructions; it leaves the 64-bit range at tiny depth, so the
// geometric law is the workhorse for runnable experiments.
class GrowthSchedule {
  public:
    enum class Law { Geometric, SquaredExponent, Explicit };

    static GrowthSchedule geometric(double ratio, size_t depth, uint64_t seed_value = 1);
    static GrowthSchedule squared_exponent(uint64_t base, size_t depth);
    static GrowthSchedule explicit_list(std::vector<uint64_t> checkpoints);

    const std::vector<uint64_t>& checkpoints() const { return checkpoints_; }
    size_t depth() const { return checkpoints_.size(); }
    uint64_t operator[](size_t i) const { return checkpoints_.at(i); }
    uint64_t back() const { return checkpoints_.back(); }

    Law law() const { return law_; }
    double ratio() const { return ratio_; }
    std::string law_name() const;

  private:
    GrowthSchedule(Law law, std::vector<uint64_t> cps, double ratio);

    Law law_ = Law::Explicit;
    std::vector<uint64_t> checkpoints_;
    double ratio_ = 0.0;
};

} // namespace denslab
