#include "levysde/random.hpp"

#include <cmath>

namespace levysde {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double RandomSource::uniform_open() {
    // (k + 1/2) * 2^-52 with k in [0, 2^52): min 2^-53, max 1 - 2^-53, both exact.
    constexpr double scale = 0x1.0p-52;
    const auto k = static_cast<double>(engine_() >> 12);
    return (k + 0.5) * scale;
}

double RandomSource::exponential() { return -std::log(uniform_open()); }

}  // namespace levysde
