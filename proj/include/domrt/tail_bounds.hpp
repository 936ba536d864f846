#pragma once

#include <cstdint>
#include <string_view>

#include "domrt/dist_core.hpp"

// Closed-form Chernoff-type bounds for sums of independent geometric random
// variables, plus a soundness validator against the exact oracle. All bound
// values are clamped to [0,1].

namespace domrt {

enum class UpperFamily { janson1, janson2, scheideler, weak, equal };
enum class LowerFamily { janson, middle, scheideler };
enum class TailSide { upper, lower };

/// Upper-tail bound on Pr[X >= (1+delta) mu] for X a sum of n independent
/// geometric variables with minimum success probability p_min and mean mu.
/// Family `equal` additionally assumes all success probabilities are equal
/// (the caller's responsibility) and uses only n and delta.
double geom_sum_upper(UpperFamily family, std::int64_t n, double p_min, double mu,
                      double delta);

/// Lower-tail bound on Pr[X <= (1-delta) mu], delta in [0,1].
double geom_sum_lower(LowerFamily family, double p_min, double mu, double delta);

struct WittBounds {
    double upper;  // Pr[X >= E[X] + lambda] <= exp(-(1/4) min{lambda^2/s, lambda p_min})
    double lower;  // Pr[X <= E[X] - lambda] <= exp(-lambda^2 / (2s))
};
WittBounds witt_bounds(double s, double p_min, double expect, double lambda);

/// For p_i >= C i/n: mean bound (1/C) n H_n, tail Pr[X >= (1+delta)(1/C) n ln n]
/// <= n^-delta, and the shifted dominating spec ceil((1/C) n ln n) + Geom(C/n).
struct HarmonicBound {
    double mean_bound;
    double tail_bound;
    GatedGeomSpec dominating_spec;
};
HarmonicBound harmonic_bound(std::int64_t n, double C, double delta);

/// Pr[Y >= (1/C)(ln n + 1) n m + lambda] for Y a sum of m independent
/// harmonic-type sums.
double harmonic_sum_bound(std::int64_t n, std::int64_t m, double C, double lambda);

/// Sums of m independent coupon-collector runtimes D_n^k: exact mean m n H_k
/// and tail Pr[Y >= m n (ln k + 1) + delta n] <= exp(-delta^2/(2m(1+delta/m))).
struct CouponBound {
    double mean;
    double tail_bound;
};
CouponBound coupon_sum_bound(std::int64_t n, std::int64_t m, std::int64_t k,
                             double delta);

struct ValidationVerdict {
    bool holds;
    double exact;  // exact tail probability from the oracle
    double bound;
};

/// Confronts a claimed bound with the exact oracle: holds iff the exact
/// Pr[X >= threshold] (or Pr[X <= threshold] for the lower side) is at most
/// bound + 10*eps, with the exact value computed by DP at the given eps.
ValidationVerdict validate_bound(const GatedGeomSpec& spec, std::int64_t threshold,
                                 double bound, TailSide side = TailSide::upper,
                                 double eps = 1e-9);

/// H_n by compensated direct summation.
double harmonic_number(std::int64_t n);

std::string_view upper_family_id(UpperFamily f);
std::string_view lower_family_id(LowerFamily f);

}  // namespace domrt
