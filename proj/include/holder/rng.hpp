#pragma once

#include <cmath>
#include <cstdint>

#include "holder/extended_complex.hpp"

namespace holder {

/// SplitMix64. Used instead of <random> engines+distributions so that
/// streams are bit-identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Log-uniform in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform on the open unit disk.
    Complex unit_disk() {
        const double r = std::sqrt(next_double());
        const double t = uniform(0.0, 2.0 * M_PI);
        return Complex(r * std::cos(t), r * std::sin(t));
    }

  private:
    std::uint64_t state_;
};

}  // namespace holder
