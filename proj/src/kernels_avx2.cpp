#if defined(DOMRT_BUILD_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "domrt/kernels.hpp"

namespace domrt::kernels::detail {

namespace {

// No FMA anywhere: mul+add keeps results bitwise equal to the scalar kernels
// (the library is compiled with -ffp-contract=off).

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

// Four independent Neumaier lanes, merged by a compensated scalar pass.
double sum_avx2(const double* x, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d t = _mm256_add_pd(s, v);
        const __m256d abs_s = _mm256_andnot_pd(sign_mask, s);
        const __m256d abs_v = _mm256_andnot_pd(sign_mask, v);
        const __m256d big_s = _mm256_add_pd(_mm256_sub_pd(s, t), v);
        const __m256d big_v = _mm256_add_pd(_mm256_sub_pd(v, t), s);
        const __m256d mask = _mm256_cmp_pd(abs_s, abs_v, _CMP_GE_OQ);
        c = _mm256_add_pd(c, _mm256_blendv_pd(big_v, big_s, mask));
        s = t;
    }
    double lanes_s[4], lanes_c[4];
    _mm256_storeu_pd(lanes_s, s);
    _mm256_storeu_pd(lanes_c, c);
    double total = 0.0, comp = lanes_c[0] + lanes_c[1] + lanes_c[2] + lanes_c[3];
    for (double v : lanes_s) {
        const double t = total + v;
        if (std::fabs(total) >= std::fabs(v))
            comp += (total - t) + v;
        else
            comp += (v - t) + total;
        total = t;
    }
    for (; i < n; ++i) {
        const double v = x[i];
        const double t = total + v;
        if (std::fabs(total) >= std::fabs(v))
            comp += (total - t) + v;
        else
            comp += (v - t) + total;
        total = t;
    }
    return total + comp;
}

std::size_t first_exceed_avx2(const double* a, const double* b, double threshold,
                              std::size_t n) {
    const __m256d vt = _mm256_set1_pd(threshold);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i));
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(diff, vt, _CMP_GT_OQ));
        if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
    }
    for (; i < n; ++i)
        if (b[i] - a[i] > threshold) return i;
    return n;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d vm = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        vm = _mm256_max_pd(vm, _mm256_andnot_pd(sign_mask, d));
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, vm);
    double m = 0.0;
    for (double v : lanes)
        if (v > m) m = v;
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{axpy_avx2, sum_avx2, first_exceed_avx2, max_abs_diff_avx2,
                         "avx2"};
    return ops;
}

}  // namespace domrt::kernels::detail

#endif  // DOMRT_BUILD_AVX2
