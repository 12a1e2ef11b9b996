#ifndef BATOPT_RNG_HPP
#define BATOPT_RNG_HPP

#include <cstdint>
#include <random>

namespace batopt {

/// Seeded random source owned by one optimizer run. Every stochastic draw a
/// run makes flows through a single instance, so seed plus draw order fixes
/// the whole trajectory. Values are built from the top 53 bits of the
/// underlying generator instead of std::uniform_real_distribution, keeping
/// traces identical across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::mt19937_64 engine_;
};

} // namespace batopt

#endif
