#include "domrt/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "domrt/kernels.hpp"

namespace domrt {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void check_upper_args(std::int64_t n, double p_min, double mu, double delta) {
    if (delta < 0.0) throw std::domain_error("geom_sum_upper: delta must be >= 0");
    if (!(p_min > 0.0) || p_min > 1.0)
        throw std::domain_error("geom_sum_upper: p_min must lie in (0,1]");
    if (n < 1) throw std::domain_error("geom_sum_upper: n must be >= 1");
    if (mu < static_cast<double>(n))
        throw std::domain_error("geom_sum_upper: mu must be >= n");
}

}  // namespace

double geom_sum_upper(UpperFamily family, std::int64_t n, double p_min, double mu,
                      double delta) {
    check_upper_args(n, p_min, mu, delta);
    const double x = delta * mu * p_min;
    switch (family) {
        case UpperFamily::janson1:
            return clamp01(1.0 / (1.0 + delta) *
                           std::exp(mu * (delta - std::log1p(delta)) * std::log1p(-p_min)));
        case UpperFamily::janson2:
            return clamp01(std::exp(-p_min * mu * (delta - std::log1p(delta))));
        case UpperFamily::scheideler:
            return clamp01(std::exp(static_cast<double>(n) *
                                        std::log1p(x / static_cast<double>(n)) -
                                    x));
        case UpperFamily::weak:
            return clamp01(std::exp(
                -(x * x) /
                (2.0 * static_cast<double>(n) * (1.0 + x / static_cast<double>(n)))));
        case UpperFamily::equal:
            return clamp01(std::exp(-0.5 * delta * delta *
                                    static_cast<double>(n - 1) / (1.0 + delta)));
    }
    throw std::logic_error("geom_sum_upper: unreachable");
}

double geom_sum_lower(LowerFamily family, double p_min, double mu, double delta) {
    if (delta < 0.0 || delta > 1.0)
        throw std::domain_error("geom_sum_lower: delta must lie in [0,1]");
    if (!(p_min > 0.0) || p_min > 1.0)
        throw std::domain_error("geom_sum_lower: p_min must lie in (0,1]");
    if (mu < 0.0) throw std::domain_error("geom_sum_lower: mu must be >= 0");
    const double pm = p_min * mu;
    switch (family) {
        case LowerFamily::janson:
            if (delta == 1.0) return 0.0;
            return clamp01(std::exp(pm * (std::log1p(-delta) + delta)));
        case LowerFamily::middle:
            return clamp01(std::exp(-delta * delta * pm / (2.0 - (4.0 / 3.0) * delta)));
        case LowerFamily::scheideler:
            return clamp01(std::exp(-0.5 * delta * delta * pm));
    }
    throw std::logic_error("geom_sum_lower: unreachable");
}

WittBounds witt_bounds(double s, double p_min, double expect, double lambda) {
    if (s < 0.0 || lambda < 0.0 || expect < 0.0 || p_min < 0.0)
        throw std::domain_error("witt_bounds: arguments must be >= 0");
    double upper;
    if (lambda == 0.0) {
        upper = 1.0;
    } else if (s == 0.0) {
        upper = clamp01(std::exp(-0.25 * lambda * p_min));
    } else {
        upper = clamp01(std::exp(-0.25 * std::min(lambda * lambda / s, lambda * p_min)));
    }
    const double lower =
        (lambda == 0.0) ? 1.0
                        : (s == 0.0 ? 0.0 : clamp01(std::exp(-lambda * lambda / (2.0 * s))));
    return {upper, lower};
}

HarmonicBound harmonic_bound(std::int64_t n, double C, double delta) {
    if (n < 2) throw std::domain_error("harmonic_bound: n must be >= 2");
    if (!(C > 0.0) || C > 1.0)
        throw std::domain_error("harmonic_bound: C must lie in (0,1]");
    if (delta < 0.0) throw std::domain_error("harmonic_bound: delta must be >= 0");
    const double mean_bound = harmonic_number(n) * static_cast<double>(n) / C;
    const double tail_bound = clamp01(std::pow(static_cast<double>(n), -delta));
    const auto offset = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(n) * std::log(static_cast<double>(n)) / C));
    GatedGeomSpec dominating(offset, {GatedGeomTerm{1.0, C / static_cast<double>(n)}});
    return {mean_bound, tail_bound, std::move(dominating)};
}

double harmonic_sum_bound(std::int64_t n, std::int64_t m, double C, double lambda) {
    if (n < 2) throw std::domain_error("harmonic_sum_bound: n must be >= 2");
    if (m < 1) throw std::domain_error("harmonic_sum_bound: m must be >= 1");
    if (!(C > 0.0) || C > 1.0)
        throw std::domain_error("harmonic_sum_bound: C must lie in (0,1]");
    if (lambda < 0.0) throw std::domain_error("harmonic_sum_bound: lambda must be >= 0");
    const double nm = static_cast<double>(n) * static_cast<double>(m);
    const double denom = 2.0 * static_cast<double>(n) * static_cast<double>(n) *
                         static_cast<double>(m) * (1.0 + lambda * C / nm);
    return clamp01(std::exp(-lambda * lambda * C * C / denom));
}

CouponBound coupon_sum_bound(std::int64_t n, std::int64_t m, std::int64_t k,
                             double delta) {
    if (k < 1 || k > n) throw std::domain_error("coupon_sum_bound: k must lie in [1..n]");
    if (m < 1) throw std::domain_error("coupon_sum_bound: m must be >= 1");
    if (delta < 0.0) throw std::domain_error("coupon_sum_bound: delta must be >= 0");
    const double mean =
        static_cast<double>(m) * static_cast<double>(n) * harmonic_number(k);
    const double md = static_cast<double>(m);
    const double tail =
        clamp01(std::exp(-delta * delta / (2.0 * md * (1.0 + delta / md))));
    return {mean, tail};
}

ValidationVerdict validate_bound(const GatedGeomSpec& spec, std::int64_t threshold,
                                 double bound, TailSide side, double eps) {
    const DiscreteDist dist = exact_dist(spec, eps);
    double exact;
    if (side == TailSide::upper) {
        // Pr[X >= threshold]; truncated mass lies above the support.
        exact = 1.0 - dist.cdf_at(threshold - 1);
    } else {
        exact = dist.cdf_at(threshold);
    }
    exact = clamp01(exact);
    return {exact <= bound + 10.0 * eps, exact, bound};
}

double harmonic_number(std::int64_t n) {
    if (n < 0) throw std::domain_error("harmonic_number: n must be >= 0");
    if (n > 100'000'000)
        throw std::domain_error("harmonic_number: n exceeds the direct-summation range");
    double s = 0.0, c = 0.0;
    for (std::int64_t i = n; i >= 1; --i) {
        const double v = 1.0 / static_cast<double>(i);
        const double t = s + v;
        if (s >= v)
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    return s + c;
}

std::string_view upper_family_id(UpperFamily f) {
    switch (f) {
        case UpperFamily::janson1: return "janson1";
        case UpperFamily::janson2: return "janson2";
        case UpperFamily::scheideler: return "scheideler";
        case UpperFamily::weak: return "weak";
        case UpperFamily::equal: return "equal";
    }
    return "?";
}

std::string_view lower_family_id(LowerFamily f) {
    switch (f) {
        case LowerFamily::janson: return "janson";
        case LowerFamily::middle: return "middle";
        case LowerFamily::scheideler: return "scheideler";
    }
    return "?";
}

}  // namespace domrt
