#if defined(DOMRT_BUILD_NEON)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "domrt/kernels.hpp"

namespace domrt::kernels::detail {

namespace {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vx = vld1q_f64(x + i);
        const float64x2_t vy = vld1q_f64(y + i);
        vst1q_f64(y + i, vaddq_f64(vy, vmulq_f64(va, vx)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double sum_neon(const double* x, std::size_t n) {
    float64x2_t s = vdupq_n_f64(0.0);
    float64x2_t c = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        const float64x2_t t = vaddq_f64(s, v);
        const float64x2_t big_s = vaddq_f64(vsubq_f64(s, t), v);
        const float64x2_t big_v = vaddq_f64(vsubq_f64(v, t), s);
        const uint64x2_t mask = vcgeq_f64(vabsq_f64(s), vabsq_f64(v));
        c = vaddq_f64(c, vbslq_f64(mask, big_s, big_v));
        s = t;
    }
    double total = 0.0, comp = vgetq_lane_f64(c, 0) + vgetq_lane_f64(c, 1);
    const double lanes[2] = {vgetq_lane_f64(s, 0), vgetq_lane_f64(s, 1)};
    for (double v : lanes) {
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

std::size_t first_exceed_neon(const double* a, const double* b, double threshold,
                              std::size_t n) {
    const float64x2_t vt = vdupq_n_f64(threshold);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t diff = vsubq_f64(vld1q_f64(b + i), vld1q_f64(a + i));
        const uint64x2_t gt = vcgtq_f64(diff, vt);
        if (vgetq_lane_u64(gt, 0)) return i;
        if (vgetq_lane_u64(gt, 1)) return i + 1;
    }
    for (; i < n; ++i)
        if (b[i] - a[i] > threshold) return i;
    return n;
}

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t vm = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        vm = vmaxq_f64(vm, d);
    }
    double m = vgetq_lane_f64(vm, 0);
    if (vgetq_lane_f64(vm, 1) > m) m = vgetq_lane_f64(vm, 1);
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{axpy_neon, sum_neon, first_exceed_neon, max_abs_diff_neon,
                         "neon"};
    return ops;
}

}  // namespace domrt::kernels::detail

#endif  // DOMRT_BUILD_NEON
