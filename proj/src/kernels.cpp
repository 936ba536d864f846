#include "domrt/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace domrt::kernels {

namespace {

using detail::Ops;

const Ops* pick(std::string_view name) {
    if (name == "scalar") return &detail::scalar_ops();
#if defined(DOMRT_BUILD_AVX2)
    if (name == "avx2") {
        if (!__builtin_cpu_supports("avx2"))
            throw std::runtime_error("kernels: avx2 not supported on this CPU");
        return &detail::avx2_ops();
    }
#endif
#if defined(DOMRT_BUILD_NEON)
    if (name == "neon") return &detail::neon_ops();
#endif
    if (name == "auto") {
#if defined(DOMRT_BUILD_AVX2)
        if (__builtin_cpu_supports("avx2")) return &detail::avx2_ops();
#endif
#if defined(DOMRT_BUILD_NEON)
        return &detail::neon_ops();
#endif
        return &detail::scalar_ops();
    }
    throw std::runtime_error("kernels: unknown backend '" + std::string(name) + "'");
}

std::atomic<const Ops*> g_ops{nullptr};

const Ops& ops() {
    const Ops* cur = g_ops.load(std::memory_order_acquire);
    if (cur) return *cur;
    const char* env = std::getenv("DOMRT_SIMD");
    const Ops* chosen = pick(env && *env ? std::string_view(env) : "auto");
    g_ops.store(chosen, std::memory_order_release);
    return *chosen;
}

}  // namespace

void axpy(double a, std::span<const double> x, std::span<double> y) {
    if (y.size() < x.size()) throw std::invalid_argument("axpy: y shorter than x");
    ops().axpy(a, x.data(), y.data(), x.size());
}

double sum(std::span<const double> x) { return ops().sum(x.data(), x.size()); }

std::optional<std::size_t> first_exceed(std::span<const double> a,
                                        std::span<const double> b, double threshold) {
    if (a.size() != b.size()) throw std::invalid_argument("first_exceed: size mismatch");
    const std::size_t i = ops().first_exceed(a.data(), b.data(), threshold, a.size());
    if (i == a.size()) return std::nullopt;
    return i;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    return ops().max_abs_diff(a.data(), b.data(), a.size());
}

std::string_view active_backend() { return ops().name; }

void set_backend(std::string_view name) {
    g_ops.store(pick(name), std::memory_order_release);
}

}  // namespace domrt::kernels
