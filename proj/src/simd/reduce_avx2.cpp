// AVX2 variants of the reduction kernels. This translation unit is the only
// one compiled with -mavx2; callers must gate on detail::avx2_supported().

#include "rfkit/simd/reduce.hpp"

#if defined(RFKIT_HAVE_AVX2)

#include <immintrin.h>

#include <vector>

namespace rfkit::simd::detail {

namespace {

// Four independent Neumaier accumulators, one per vector lane. Lanes are
// merged in a fixed order so results are deterministic run to run.
struct VecNeumaier {
    __m256d sum = _mm256_setzero_pd();
    __m256d comp = _mm256_setzero_pd();

    void add(__m256d x) {
        const __m256d sign = _mm256_set1_pd(-0.0);
        const __m256d t = _mm256_add_pd(sum, x);
        const __m256d abs_sum = _mm256_andnot_pd(sign, sum);
        const __m256d abs_x = _mm256_andnot_pd(sign, x);
        const __m256d sum_ge = _mm256_cmp_pd(abs_sum, abs_x, _CMP_GE_OQ);
        const __m256d err_sum_big = _mm256_add_pd(_mm256_sub_pd(sum, t), x);
        const __m256d err_x_big = _mm256_add_pd(_mm256_sub_pd(x, t), sum);
        comp = _mm256_add_pd(comp, _mm256_blendv_pd(err_x_big, err_sum_big, sum_ge));
        sum = t;
    }

    void merge_into(Neumaier& acc) const {
        alignas(32) double s[4];
        alignas(32) double c[4];
        _mm256_store_pd(s, sum);
        _mm256_store_pd(c, comp);
        for (int lane = 0; lane < 4; ++lane) {
            acc.add(s[lane]);
            acc.add(c[lane]);
        }
    }
};

} // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
    VecNeumaier vec;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vec.add(_mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    Neumaier acc;
    vec.merge_into(acc);
    for (; i < n; ++i) {
        acc.add(a[i] * b[i]);
    }
    return acc.value();
}

double periodic_dot_avx2(const double* a, std::size_t n,
                         const double* pattern, std::size_t period,
                         std::size_t phase) {
    // Tile the pattern with three wrap-around slots so any 4-wide window
    // starting at pos < period is a contiguous load.
    std::vector<double> ext(period + 3);
    for (std::size_t i = 0; i < ext.size(); ++i) {
        ext[i] = pattern[i % period];
    }

    VecNeumaier vec;
    std::size_t i = 0;
    std::size_t pos = phase;
    for (; i + 4 <= n; i += 4) {
        vec.add(_mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(ext.data() + pos)));
        pos = (pos + 4) % period;
    }
    Neumaier acc;
    vec.merge_into(acc);
    for (; i < n; ++i) {
        acc.add(a[i] * pattern[pos]);
        if (++pos == period) pos = 0;
    }
    return acc.value();
}

} // namespace rfkit::simd::detail

#endif // RFKIT_HAVE_AVX2
