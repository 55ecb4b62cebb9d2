#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rfkit/zeta/measure.hpp"

namespace rfkit::zeta {

// Draws from the zeta distribution P(X = n) = n^-s / zeta(s) by rejection
// from a continuous power-law envelope (Devroye's method). The infinite tail
// is handled by the envelope itself, not by truncating the support; the only
// deviations from the ideal law are the 53-bit granularity of the underlying
// uniforms and a retry for proposals past 2^63 (excluded mass is at most
// 2^-53 + (2^63)^(1-s) * s / ((s-1) * zeta(s)), irrelevant at any testable
// scale).
class ZetaSampler {
public:
    // Throws std::domain_error unless s > 1.
    ZetaSampler(double s, std::uint64_t seed);

    std::uint64_t draw();

private:
    double s_minus_1_;
    double envelope_b_;
    std::mt19937_64 rng_;
};

// count i.i.d. draws, deterministic for a given seed.
std::vector<std::uint64_t> sample(const ZetaParams& params, std::uint64_t seed,
                                  std::uint64_t count);

} // namespace rfkit::zeta
