#pragma once

#include <cstddef>
#include <string_view>

// Reduction kernels behind the estimator sums. Every kernel has a scalar
// reference implementation and, on x86-64 builds with AVX2 available, a
// vectorized variant selected once at startup. Both variants use Neumaier
// compensated accumulation, so results are reproducible to well below 1e-12
// regardless of which lane runs; the unit tests assert scalar/AVX2 agreement.
//
// The environment variable RFKIT_SIMD (values: "scalar", "avx2") overrides
// the automatic selection. Requesting "avx2" on a machine without AVX2
// support is a configuration error.

namespace rfkit::simd {

enum class Lane { scalar, avx2 };

// Lane chosen for this process (detected once, then cached).
Lane active_lane();

std::string_view lane_name(Lane lane);

// Parses an override string; throws std::invalid_argument on unknown values.
Lane parse_lane(std::string_view text);

// Sum of a[i] * b[i] for i in [0, n). The ranges may overlap.
double dot(const double* a, const double* b, std::size_t n);

// Sum of a[i] * pattern[(phase + i) % period] for i in [0, n).
// Requires period >= 1 and phase < period.
double periodic_dot(const double* a, std::size_t n,
                    const double* pattern, std::size_t period,
                    std::size_t phase);

namespace detail {

bool avx2_compiled();
bool avx2_supported();

double dot_scalar(const double* a, const double* b, std::size_t n);
double periodic_dot_scalar(const double* a, std::size_t n,
                           const double* pattern, std::size_t period,
                           std::size_t phase);

#if defined(RFKIT_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
double periodic_dot_avx2(const double* a, std::size_t n,
                         const double* pattern, std::size_t period,
                         std::size_t phase);
#endif

// Neumaier-compensated accumulator shared by the scalar kernels and the
// tail/merge steps of the vector kernels.
struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if ((sum >= 0 ? sum : -sum) >= (x >= 0 ? x : -x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace detail

} // namespace rfkit::simd
