#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

// Data-parallel inner loops behind the exact-distribution machinery.
// Scalar reference implementations always exist; AVX2 (x86-64) and NEON
// (aarch64) variants are selected at runtime and must agree with the
// scalar kernels (bitwise for axpy/first_exceed, to ~1e-13 for sum).
// Backend selection: DOMRT_SIMD=auto|scalar|avx2|neon, or set_backend().

namespace domrt::kernels {

/// y[i] += a * x[i] for i in [0, x.size()); y must be at least as long as x.
void axpy(double a, std::span<const double> x, std::span<double> y);

/// Neumaier-compensated sum.
double sum(std::span<const double> x);

/// Smallest i with b[i] - a[i] > threshold, if any. Spans must match in size.
std::optional<std::size_t> first_exceed(std::span<const double> a,
                                        std::span<const double> b,
                                        double threshold);

/// max_i |a[i] - b[i]| over equally sized spans; 0 for empty input.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

/// Name of the backend currently in use ("scalar", "avx2", "neon").
std::string_view active_backend();

/// Force a backend; "auto" re-runs detection. Throws if unavailable.
void set_backend(std::string_view name);

namespace detail {

struct Ops {
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    // Returns n when no index exceeds.
    std::size_t (*first_exceed)(const double*, const double*, double, std::size_t);
    double (*max_abs_diff)(const double*, const double*, std::size_t);
    const char* name;
};

const Ops& scalar_ops();
#if defined(DOMRT_BUILD_AVX2)
const Ops& avx2_ops();
#endif
#if defined(DOMRT_BUILD_NEON)
const Ops& neon_ops();
#endif

}  // namespace detail

}  // namespace domrt::kernels
