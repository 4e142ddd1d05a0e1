#ifndef ASPRL_RNG_HPP
#define ASPRL_RNG_HPP

#include <cstdint>
#include <random>

namespace asprl {

/// Seeded pseudo-random source. All stochastic components draw through this
/// wrapper so that runs with equal seeds are bit-for-bit reproducible across
/// platforms (mt19937_64 output is fixed by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double next_double() {
        // 53 random bits scaled; avoids distribution objects whose output
        // is not pinned down by the standard.
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t next_index(std::size_t n) {
        // Rejection sampling to keep the draw unbiased.
        std::uint64_t bound = n;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = engine_();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            if (static_cast<std::uint64_t>(m) >= threshold) {
                return static_cast<std::size_t>(m >> 64);
            }
        }
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace asprl

#endif
