#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domrt/errors.hpp"
#include "domrt/rng.hpp"

namespace domrt {

/// One Bernoulli-gated geometric summand: contributes Geom(succ) with
/// probability gate, and 0 otherwise.
struct GatedGeomTerm {
    double gate = 1.0;  // in [0,1]
    double succ = 1.0;  // in (0,1]
};

/// A constant offset plus a sum of independent gated geometric variables.
/// Immutable after construction; the universal dominating-distribution object.
class GatedGeomSpec {
public:
    GatedGeomSpec() = default;
    GatedGeomSpec(std::int64_t offset, std::vector<GatedGeomTerm> terms);

    /// Single plain Geom(p).
    static GatedGeomSpec geometric(double p);
    /// Sum of independent Geom(p_i), all gates 1.
    static GatedGeomSpec sum_of_geometrics(std::span<const double> probs);

    std::int64_t offset() const noexcept { return offset_; }
    const std::vector<GatedGeomTerm>& terms() const noexcept { return terms_; }

private:
    std::int64_t offset_ = 0;
    std::vector<GatedGeomTerm> terms_;
};

/// Pr[Geom(p) = k] = (1-p)^(k-1) p.
double geom_pmf(double p, std::int64_t k);

/// Pr[Geom(p) >= k] = (1-p)^(k-1).
double geom_tail(double p, std::int64_t k);

/// Inverse-transform geometric value for a given uniform draw u in (0,1).
std::int64_t geom_inverse_transform(double p, double u);

/// offset + sum of gate_i / succ_i.
double spec_mean(const GatedGeomSpec& spec);

/// sum of (gate_i (2 - succ_i) - gate_i^2) / succ_i^2.
double spec_variance(const GatedGeomSpec& spec);

/// Explicit distribution over a contiguous integer support [lo, lo+pmf.size()),
/// with the truncated-away mass recorded in tail_mass (<= eps budget).
class DiscreteDist {
public:
    DiscreteDist(std::int64_t lo, std::vector<double> pmf, double tail_mass, double eps);

    /// Convenience: an exact finite distribution with zero truncation budget.
    static DiscreteDist exact(std::int64_t lo, std::vector<double> pmf);

    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept {
        return lo_ + static_cast<std::int64_t>(pmf_.size()) - 1;
    }
    std::span<const double> pmf() const noexcept { return pmf_; }
    std::span<const double> cdf() const noexcept { return cdf_; }
    double tail_mass() const noexcept { return tail_mass_; }
    double eps() const noexcept { return eps_; }

    double pmf_at(std::int64_t k) const;
    /// CDF evaluated at integer k: 0 below lo, (1 - tail_mass) at and past hi.
    double cdf_at(std::int64_t k) const;

    double mean() const;
    double variance() const;

    /// Smallest support point with CDF >= u. Throws TruncatedTailError when u
    /// exceeds the retained mass.
    std::int64_t quantile(double u) const;

private:
    std::int64_t lo_ = 0;
    std::vector<double> pmf_;
    std::vector<double> cdf_;
    double tail_mass_ = 0.0;
    double eps_ = 0.0;
};

inline constexpr std::size_t kDefaultSupportCap = 10'000'000;

/// Exact PMF of a gated geometric sum by sequential convolution; each
/// geometric factor is truncated at its (1 - eps/(2*#terms)) quantile so the
/// total discarded mass stays below eps.
DiscreteDist exact_dist(const GatedGeomSpec& spec, double eps,
                        std::size_t support_cap = kDefaultSupportCap);

/// One draw from the spec: every gate as a Bernoulli, every fired geometric
/// by inverse transform. Deterministic in the seed.
std::int64_t sample_spec(const GatedGeomSpec& spec, std::uint64_t seed);
std::int64_t sample_spec(const GatedGeomSpec& spec, Rng& rng);

struct DominationVerdict {
    bool holds = true;
    std::int64_t at = 0;  // first violating lambda when !holds
    double gap = 0.0;     // CDF_b(at) - CDF_a(at)
};

/// Tests a "is dominated by" b: CDF_a(lambda) >= CDF_b(lambda) - slack for
/// every integer lambda in the union of supports. Requires both truncation
/// budgets to be at most slack/4.
DominationVerdict dominates_exact(const DiscreteDist& a, const DiscreteDist& b,
                                  double slack);

/// (Q_a(u), Q_b(u)) under the generalized inverse CDF; a monotone coupling.
std::pair<std::int64_t, std::int64_t> quantile_couple(const DiscreteDist& a,
                                                      const DiscreteDist& b, double u);

/// Serialization: header "k,pmf,cdf", one row per support point, and a final
/// "# tail_mass=<value>" comment. Leading "# key=value" comments optional.
void write_csv(std::ostream& os, const DiscreteDist& dist,
               std::span<const std::pair<std::string, std::string>> comments = {});
DiscreteDist read_discrete_dist_csv(std::istream& is);

}  // namespace domrt
