#pragma once

#include <cstdint>
#include <random>

namespace levysde {

/// 64-bit avalanche mix (splitmix64 finalizer). Bijective on uint64.
std::uint64_t mix64(std::uint64_t x) noexcept;

/**
 * Seeded random source used everywhere randomness is consumed.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
 * converts bits to doubles by hand so results are identical across standard
 * library implementations. Not thread-safe; give each task its own instance.
 */
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on the open interval (0,1), 52-bit resolution.
    double uniform_open();

    /// Standard exponential, strictly positive.
    double exponential();

private:
    std::mt19937_64 engine_;
};

}  // namespace levysde
