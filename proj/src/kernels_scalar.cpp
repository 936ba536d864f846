#include <cmath>
#include <cstddef>

#include "domrt/kernels.hpp"

namespace domrt::kernels::detail {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        const double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    return s + c;
}

std::size_t first_exceed_scalar(const double* a, const double* b, double threshold,
                                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (b[i] - a[i] > threshold) return i;
    return n;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{axpy_scalar, sum_scalar, first_exceed_scalar,
                         max_abs_diff_scalar, "scalar"};
    return ops;
}

}  // namespace domrt::kernels::detail
