#include "rfkit/zeta/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "rfkit/rng.hpp"

namespace rfkit::zeta {

ZetaSampler::ZetaSampler(double s, std::uint64_t seed)
    : s_minus_1_(s - 1.0), envelope_b_(std::exp2(s - 1.0)), rng_(seed) {
    if (!(s > 1.0)) {
        throw std::domain_error("ZetaSampler: requires s > 1");
    }
}

std::uint64_t ZetaSampler::draw() {
    // For s - 1 >= 1024 the envelope constant overflows; P(X >= 2) < 2^-1024
    // is below the resolution of the 53-bit uniforms anyway.
    if (s_minus_1_ >= 1024.0) return 1;

    constexpr double kUint64Cap = 9223372036854775808.0; // 2^63

    for (;;) {
        const double u = 1.0 - rng::unit_double(rng_); // (0, 1]
        const double v = rng::unit_double(rng_);
        const double x = std::floor(std::pow(u, -1.0 / s_minus_1_));
        if (!(x >= 1.0) || x >= kUint64Cap) continue;
        const double t = std::pow(1.0 + 1.0 / x, s_minus_1_);
        if (v * x * (t - 1.0) / (envelope_b_ - 1.0) <= t / envelope_b_) {
            return static_cast<std::uint64_t>(x);
        }
    }
}

std::vector<std::uint64_t> sample(const ZetaParams& params, std::uint64_t seed,
                                  std::uint64_t count) {
    if (count == 0) throw std::invalid_argument("sample: count must be >= 1");
    ZetaSampler sampler(params.s, seed);
    std::vector<std::uint64_t> draws(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        draws[i] = sampler.draw();
    }
    return draws;
}

} // namespace rfkit::zeta
