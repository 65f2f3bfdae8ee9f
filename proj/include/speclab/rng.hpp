#ifndef SPECLAB_RNG_HPP
#define SPECLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "speclab/types.hpp"

namespace speclab {

/// Seeded generator with portable output mapping. std::mt19937_64 is fully
/// specified by the standard; the uniform mappings below avoid the
/// implementation-defined std::*_distribution, so streams are reproducible
/// across compilers for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive); bias is negligible for small ranges.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

    cxd complex_in_box(double radius) {
        return {uniform(-radius, radius), uniform(-radius, radius)};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace speclab

#endif
