#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>

// Deterministic draw helpers on top of std::mt19937_64. The standard leaves
// uniform_real_distribution and uniform_int_distribution implementation
// defined, so reproducible streams are built from the raw engine output.

namespace rfkit::rng {

// Uniform double in [0, 1), 53 significant bits.
inline double unit_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by masked rejection; unbiased.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded: n must be >= 1");
    if (n == 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    for (;;) {
        const std::uint64_t x = gen() & mask;
        if (x < n) return x;
    }
}

} // namespace rfkit::rng
