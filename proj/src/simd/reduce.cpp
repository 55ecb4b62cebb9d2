#include "rfkit/simd/reduce.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rfkit::simd {

namespace detail {

bool avx2_compiled() {
#if defined(RFKIT_HAVE_AVX2)
    return true;
#else
    return false;
#endif
}

bool avx2_supported() {
#if defined(RFKIT_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    Neumaier acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc.add(a[i] * b[i]);
    }
    return acc.value();
}

double periodic_dot_scalar(const double* a, std::size_t n,
                           const double* pattern, std::size_t period,
                           std::size_t phase) {
    Neumaier acc;
    std::size_t pos = phase;
    for (std::size_t i = 0; i < n; ++i) {
        acc.add(a[i] * pattern[pos]);
        if (++pos == period) pos = 0;
    }
    return acc.value();
}

} // namespace detail

std::string_view lane_name(Lane lane) {
    switch (lane) {
        case Lane::scalar: return "scalar";
        case Lane::avx2: return "avx2";
    }
    return "unknown";
}

Lane parse_lane(std::string_view text) {
    if (text == "scalar") return Lane::scalar;
    if (text == "avx2") return Lane::avx2;
    throw std::invalid_argument("unknown SIMD lane '" + std::string(text) +
                                "' (expected 'scalar' or 'avx2')");
}

namespace {

Lane detect_lane() {
    if (const char* env = std::getenv("RFKIT_SIMD")) {
        const Lane forced = parse_lane(env);
        if (forced == Lane::avx2 && !detail::avx2_supported()) {
            throw std::runtime_error(
                "RFKIT_SIMD=avx2 requested but AVX2 is unavailable in this build/CPU");
        }
        return forced;
    }
    return detail::avx2_supported() ? Lane::avx2 : Lane::scalar;
}

} // namespace

Lane active_lane() {
    static const Lane lane = detect_lane();
    return lane;
}

double dot(const double* a, const double* b, std::size_t n) {
#if defined(RFKIT_HAVE_AVX2)
    if (active_lane() == Lane::avx2) return detail::dot_avx2(a, b, n);
#endif
    return detail::dot_scalar(a, b, n);
}

double periodic_dot(const double* a, std::size_t n,
                    const double* pattern, std::size_t period,
                    std::size_t phase) {
    if (period == 0) throw std::invalid_argument("periodic_dot: period must be >= 1");
    if (phase >= period) throw std::invalid_argument("periodic_dot: phase must be < period");
#if defined(RFKIT_HAVE_AVX2)
    if (active_lane() == Lane::avx2) {
        return detail::periodic_dot_avx2(a, n, pattern, period, phase);
    }
#endif
    return detail::periodic_dot_scalar(a, n, pattern, period, phase);
}

} // namespace rfkit::simd
