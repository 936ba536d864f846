#include "domrt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "domrt/kernels.hpp"

namespace domrt {

LevelSpec::LevelSpec(std::vector<double> p) : probs(std::move(p)) {
    if (probs.empty()) throw std::domain_error("LevelSpec: needs at least one level");
    for (double q : probs)
        if (!(q > 0.0) || q > 1.0)
            throw std::domain_error("LevelSpec: probabilities must lie in (0,1]");
}

GatedGeomSpec fitness_level_spec(const LevelSpec& levels) {
    std::vector<GatedGeomTerm> terms;
    terms.reserve(levels.probs.size());
    for (double p : levels.probs) terms.push_back({1.0, p});
    return GatedGeomSpec(0, std::move(terms));
}

double q_kbit(std::int64_t n, std::int64_t k, std::int64_t i) {
    if (k < 1 || k > n) throw std::domain_error("q_kbit: k must lie in [1..n]");
    if (i < 0 || i > n - 1) throw std::domain_error("q_kbit: i must lie in [0..n-1]");
    if (k - 1 > n - i - 1) return 0.0;
    double q = static_cast<double>(k) / static_cast<double>(n);
    for (std::int64_t j = 1; j < k; ++j)
        q *= static_cast<double>(n - i - j) / static_cast<double>(n - j);
    return q;
}

std::int64_t optimal_k(std::int64_t n, std::int64_t i) {
    if (i < 0 || i > n - 1) throw std::domain_error("optimal_k: i must lie in [0..n-1]");
    return n / (i + 1);
}

GatedGeomSpec lo_exact_spec(std::span<const double> q) {
    std::vector<GatedGeomTerm> terms;
    terms.reserve(q.size());
    for (double qi : q) {
        if (qi == 0.0)
            throw InfiniteRuntimeError("lo_exact_spec: infinite expected runtime (q_i = 0)");
        terms.push_back({0.5, qi});
    }
    return GatedGeomSpec(0, std::move(terms));
}

GatedGeomSpec lo_target_spec(std::span<const double> q, std::int64_t a) {
    if (a < 0 || a > static_cast<std::int64_t>(q.size()))
        throw std::domain_error("lo_target_spec: a must lie in [0..n]");
    return lo_exact_spec(q.subspan(0, static_cast<std::size_t>(a)));
}

std::vector<double> lo_q_for_operator(const MutationOp& op, std::int64_t n) {
    op.validate(static_cast<std::size_t>(n));
    std::vector<double> q(static_cast<std::size_t>(n));
    const double nd = static_cast<double>(n);
    switch (op.kind) {
        case MutationOp::Kind::one_bit:
            for (auto& v : q) v = 1.0 / nd;
            break;
        case MutationOp::Kind::k_bit:
            for (std::int64_t i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] = q_kbit(n, op.k, i);
            break;
        case MutationOp::Kind::standard_bit:
            for (std::int64_t i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] =
                    std::exp(static_cast<double>(i) * std::log1p(-op.rate)) * op.rate;
            break;
        case MutationOp::Kind::position_dependent:
            if (op.per_bit) {
                double prefix = 1.0;
                for (std::int64_t i = 0; i < n; ++i) {
                    q[static_cast<std::size_t>(i)] =
                        prefix * op.probs[static_cast<std::size_t>(i)];
                    prefix *= 1.0 - op.probs[static_cast<std::size_t>(i)];
                }
            } else {
                for (std::int64_t i = 0; i < n; ++i)
                    q[static_cast<std::size_t>(i)] = op.probs[static_cast<std::size_t>(i)];
            }
            break;
        case MutationOp::Kind::fitness_dependent_k:
            for (std::int64_t i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] = q_kbit(n, optimal_k(n, i), i);
            break;
        case MutationOp::Kind::fitness_dependent_rate:
            for (std::int64_t i = 0; i < n; ++i) {
                const double p = 1.0 / static_cast<double>(i + 1);
                q[static_cast<std::size_t>(i)] =
                    std::exp(static_cast<double>(i) * std::log1p(-p)) * p;
            }
            break;
        case MutationOp::Kind::mixed_one_two:
            for (std::int64_t i = 0; i < n; ++i)
                q[static_cast<std::size_t>(i)] =
                    op.mix_p / nd + 2.0 * (1.0 - op.mix_p) *
                                        static_cast<double>(n - i - 1) /
                                        (nd * (nd - 1.0));
            break;
        case MutationOp::Kind::heavy_tailed: {
            const std::int64_t amax = std::max<std::int64_t>(1, n / 2);
            std::vector<double> w(static_cast<std::size_t>(amax));
            for (std::int64_t a = 1; a <= amax; ++a)
                w[static_cast<std::size_t>(a - 1)] =
                    std::pow(static_cast<double>(a), -op.beta);
            const double norm = kernels::sum(w);
            for (std::int64_t i = 0; i < n; ++i) {
                double qi = 0.0;
                for (std::int64_t a = 1; a <= amax; ++a) {
                    const double p = static_cast<double>(a) / nd;
                    qi += w[static_cast<std::size_t>(a - 1)] *
                          std::exp(static_cast<double>(i) * std::log1p(-p)) * p;
                }
                q[static_cast<std::size_t>(i)] = qi / norm;
            }
            break;
        }
    }
    return q;
}

double lo_ea_expected_runtime(std::int64_t n, double p) {
    if (n < 1) throw std::domain_error("lo_ea_expected_runtime: n must be >= 1");
    if (!(p > 0.0) || p >= 1.0)
        throw std::domain_error("lo_ea_expected_runtime: p must lie in (0,1)");
    const double pow_term = std::exp(static_cast<double>(1 - n) * std::log1p(-p));
    return (pow_term - (1.0 - p)) / (2.0 * p * p);
}

double optimal_static_rate(std::int64_t n) {
    if (n < 2) throw std::domain_error("optimal_static_rate: n must be >= 2");
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 1e-9, b = 0.5;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = lo_ea_expected_runtime(n, c);
    double fd = lo_ea_expected_runtime(n, d);
    while ((b - a) > 1e-6 * 0.5 * (a + b)) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = lo_ea_expected_runtime(n, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = lo_ea_expected_runtime(n, d);
        }
    }
    return 0.5 * (a + b);
}

UnbiasedAudit static_unbiased_audit(std::int64_t n, std::span<const double> r) {
    if (n < 1) throw std::domain_error("static_unbiased_audit: n must be >= 1");
    if (r.size() != static_cast<std::size_t>(n + 1))
        throw std::domain_error("static_unbiased_audit: mixture needs n+1 weights");
    std::vector<double> weights(r.begin(), r.end());
    for (double w : weights)
        if (w < 0.0) throw std::domain_error("static_unbiased_audit: negative weight");
    if (std::fabs(kernels::sum(weights) - 1.0) > 1e-12)
        throw std::domain_error("static_unbiased_audit: mixture must sum to 1");

    std::vector<double> q(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t k = 1; k <= n; ++k) {
        const double rk = weights[static_cast<std::size_t>(k)];
        if (rk == 0.0) continue;
        for (std::int64_t i = 0; i < n; ++i)
            q[static_cast<std::size_t>(i)] += rk * q_kbit(n, k, i);
    }
    // Eq. identity: the level probabilities of every k-bit operator sum to 1,
    // so the mixture's sum equals the non-null mass.
    const double non_null = 1.0 - weights[0];
    if (std::fabs(kernels::sum(q) - non_null) > 1e-10)
        throw std::logic_error("static_unbiased_audit: level-sum identity violated");

    double expected = 0.0;
    bool infinite = false;
    for (double qi : q) {
        if (qi == 0.0) {
            infinite = true;
            break;
        }
        expected += 0.5 / qi;
    }
    if (infinite) expected = std::numeric_limits<double>::infinity();
    const double bound = 0.5 * static_cast<double>(n) * static_cast<double>(n);
    return {expected, expected >= bound - 1e-6};
}

std::vector<double> binomial_pmf(std::int64_t n, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::domain_error("binomial_pmf: bad input");
    std::vector<double> pmf(static_cast<std::size_t>(n + 1), 0.0);
    if (p == 0.0) {
        pmf[0] = 1.0;
        return pmf;
    }
    if (p == 1.0) {
        pmf[static_cast<std::size_t>(n)] = 1.0;
        return pmf;
    }
    pmf[0] = std::exp(static_cast<double>(n) * std::log1p(-p));
    const double odds = p / (1.0 - p);
    for (std::int64_t k = 0; k < n; ++k)
        pmf[static_cast<std::size_t>(k + 1)] = pmf[static_cast<std::size_t>(k)] * odds *
                                               static_cast<double>(n - k) /
                                               static_cast<double>(k + 1);
    return pmf;
}

bool mutation_monotone_check(std::int64_t n, double p, std::int64_t a, std::int64_t b) {
    if (!(a >= 0 && a <= b && b <= n))
        throw std::domain_error("mutation_monotone_check: need 0 <= a <= b <= n");
    if (!(p > 0.0) || p > 0.5)
        throw std::domain_error("mutation_monotone_check: p must lie in (0, 1/2]");
    auto offspring_ones = [&](std::int64_t w) {
        const auto flips_in_ones = binomial_pmf(w, p);
        const auto flips_in_zeros = binomial_pmf(n - w, p);
        std::vector<double> pmf(static_cast<std::size_t>(n + 1), 0.0);
        for (std::int64_t j = 0; j <= w; ++j)
            for (std::int64_t l = 0; l <= n - w; ++l)
                pmf[static_cast<std::size_t>(w - j + l)] +=
                    flips_in_ones[static_cast<std::size_t>(j)] *
                    flips_in_zeros[static_cast<std::size_t>(l)];
        return pmf;
    };
    const auto pa = offspring_ones(a);
    const auto pb = offspring_ones(b);
    std::vector<double> fa(pa.size()), fb(pb.size());
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        sa += pa[i];
        sb += pb[i];
        fa[i] = sa;
        fb[i] = sb;
    }
    return !kernels::first_exceed(fa, fb, 1e-12).has_value();
}

double dkw_band(double alpha, std::size_t n_samples) {
    if (!(alpha > 0.0) || alpha >= 0.5)
        throw std::domain_error("dkw_band: alpha must lie in (0, 0.5)");
    if (n_samples == 0) throw std::domain_error("dkw_band: empty sample");
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n_samples)));
}

StepCdf to_step_cdf(const SampleSet& samples, double alpha) {
    if (samples.values.empty()) throw std::domain_error("to_step_cdf: empty sample set");
    StepCdf out;
    out.band = dkw_band(alpha, samples.values.size());
    const double inv = 1.0 / static_cast<double>(samples.values.size());
    for (std::size_t i = 0; i < samples.values.size(); ++i) {
        if (!out.xs.empty() && out.xs.back() == samples.values[i]) {
            out.cdf.back() = static_cast<double>(i + 1) * inv;
        } else {
            out.xs.push_back(samples.values[i]);
            out.cdf.push_back(static_cast<double>(i + 1) * inv);
        }
    }
    return out;
}

StepCdf to_step_cdf(const DiscreteDist& dist) {
    StepCdf out;
    out.band = dist.eps();
    const auto cdf = dist.cdf();
    out.xs.resize(cdf.size());
    out.cdf.assign(cdf.begin(), cdf.end());
    for (std::size_t i = 0; i < cdf.size(); ++i)
        out.xs[i] = dist.lo() + static_cast<std::int64_t>(i);
    return out;
}

namespace {

struct MergedCdfs {
    std::vector<std::int64_t> xs;
    std::vector<double> fa;
    std::vector<double> fb;
};

// Evaluates both step functions on the union of jump points; any violation
// or extreme gap appears at one of them.
MergedCdfs merge_cdfs(const StepCdf& a, const StepCdf& b) {
    MergedCdfs out;
    out.xs.reserve(a.xs.size() + b.xs.size());
    out.fa.reserve(a.xs.size() + b.xs.size());
    out.fb.reserve(a.xs.size() + b.xs.size());
    std::size_t ia = 0, ib = 0;
    while (ia < a.xs.size() || ib < b.xs.size()) {
        std::int64_t x;
        if (ib >= b.xs.size())
            x = a.xs[ia];
        else if (ia >= a.xs.size())
            x = b.xs[ib];
        else
            x = std::min(a.xs[ia], b.xs[ib]);
        while (ia < a.xs.size() && a.xs[ia] <= x) ++ia;
        while (ib < b.xs.size() && b.xs[ib] <= x) ++ib;
        out.xs.push_back(x);
        out.fa.push_back(ia == 0 ? 0.0 : a.cdf[ia - 1]);
        out.fb.push_back(ib == 0 ? 0.0 : b.cdf[ib - 1]);
    }
    return out;
}

}  // namespace

EmpiricalVerdict empirical_dominates(const StepCdf& a, const StepCdf& b) {
    const MergedCdfs merged = merge_cdfs(a, b);
    const auto idx = kernels::first_exceed(merged.fa, merged.fb, a.band + b.band);
    if (!idx) return {true, 0, 0.0};
    return {false, merged.xs[*idx], merged.fb[*idx] - merged.fa[*idx]};
}

CdfGap max_cdf_upshift(const StepCdf& a, const StepCdf& b) {
    const MergedCdfs merged = merge_cdfs(a, b);
    CdfGap best{-1.0, 0};
    for (std::size_t i = 0; i < merged.xs.size(); ++i) {
        const double gap = merged.fb[i] - merged.fa[i];
        if (gap > best.gap) best = {gap, merged.xs[i]};
    }
    return best;
}

double max_cdf_discrepancy(const StepCdf& a, const StepCdf& b) {
    const MergedCdfs merged = merge_cdfs(a, b);
    return kernels::max_abs_diff(merged.fa, merged.fb);
}

EmpiricalVerdict empirical_dominates(const SampleSet& a, const SampleSet& b,
                                     double alpha) {
    return empirical_dominates(to_step_cdf(a, alpha), to_step_cdf(b, alpha));
}

EmpiricalVerdict empirical_dominates(const SampleSet& a, const DiscreteDist& b,
                                     double alpha) {
    return empirical_dominates(to_step_cdf(a, alpha), to_step_cdf(b));
}

EmpiricalVerdict empirical_dominates(const DiscreteDist& a, const SampleSet& b,
                                     double alpha) {
    return empirical_dominates(to_step_cdf(a), to_step_cdf(b, alpha));
}

double counterexample_probs(CounterExample which, std::int64_t param) {
    switch (which) {
        case CounterExample::rs_le2: {
            if (param < 2) throw std::domain_error("rs_le2: n must be >= 2");
            const double n = static_cast<double>(param);
            return std::exp2(-n + 1.0) - std::exp2(-2.0 * n);
        }
        case CounterExample::ea_le2: {
            if (param < 2) throw std::domain_error("ea_le2: n must be >= 2");
            const double n = static_cast<double>(param);
            const double stay = std::exp(n * std::log1p(-1.0 / n));
            return std::exp2(-n + 1.0) - stay * std::exp2(-n);
        }
        case CounterExample::fitprop:
            if (param < 2) throw std::domain_error("fitprop: mu must be >= 2");
            return 9.0 / (static_cast<double>(param) + 8.0);
    }
    throw std::logic_error("counterexample_probs: unreachable");
}

double fitprop_select_prob(std::span<const double> fitnesses, double threshold) {
    double total = 0.0, selected = 0.0;
    for (double f : fitnesses) {
        if (f < 0.0) throw std::domain_error("fitprop_select_prob: negative fitness");
        total += f;
        if (f >= threshold) selected += f;
    }
    if (total <= 0.0) throw std::domain_error("fitprop_select_prob: selection undefined");
    return selected / total;
}

double SsspTheoremParams::tail(double eps) const {
    if (eps < 0.0) throw std::domain_error("sssp tail: eps must be >= 0");
    return std::min(1.0, std::pow(static_cast<double>(n - 1), -eps));
}

SsspTheoremParams sssp_theorem_params(std::int64_t n, std::int64_t ell) {
    if (n < 4) throw std::domain_error("sssp_theorem_params: n must be >= 4");
    if (ell < 2) throw std::domain_error("sssp_theorem_params: ell must be >= 2");
    const double ratio =
        4.0 * std::log(static_cast<double>(n - 1)) / static_cast<double>(ell - 1);
    const double delta = std::max(ratio, std::sqrt(ratio));
    const double p = 1.0 / (std::exp(1.0) * static_cast<double>(n - 1) *
                            static_cast<double>(n - 2));
    const double t0 = (1.0 + delta) * static_cast<double>(ell) / p;
    const double mean_bound = (1.0 + 1.0 / std::log(static_cast<double>(n - 1))) * t0;
    return {delta, p, t0, mean_bound, n};
}

GatedGeomSpec jump_lower_spec(std::int64_t n, std::int64_t k) {
    if (k < 2 || 4 * k > n)
        throw std::domain_error("jump_lower_spec: k must lie in [2..n/4]");
    const double gate = -std::expm1(-static_cast<double>(n) / 8.0);
    const double pk = std::pow(static_cast<double>(n), -static_cast<double>(k)) *
                      std::exp(static_cast<double>(n - k) *
                               std::log1p(-1.0 / static_cast<double>(n)));
    return GatedGeomSpec(0, {GatedGeomTerm{gate, pk}});
}

LevelSpec preset_onemax(std::int64_t n) {
    if (n < 1) throw std::domain_error("preset onemax: n must be >= 1");
    std::vector<double> probs(static_cast<std::size_t>(n));
    const double en = std::exp(1.0) * static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i)
        probs[static_cast<std::size_t>(i)] = static_cast<double>(n - i) / en;
    return LevelSpec(std::move(probs));
}

LevelSpec preset_sorting(std::int64_t n) {
    if (n < 2) throw std::domain_error("preset sorting: n must be >= 2");
    const std::int64_t levels = n * (n - 1) / 2;
    std::vector<double> probs(static_cast<std::size_t>(levels));
    const double denom = std::exp(1.0) * static_cast<double>(levels);
    for (std::int64_t i = 1; i <= levels; ++i)
        probs[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) / denom;
    return LevelSpec(std::move(probs));
}

LevelSpec preset_mu1_lo(std::int64_t n, std::int64_t mu) {
    if (n < 1) throw std::domain_error("preset mu1-lo: n must be >= 1");
    if (mu < 1) throw std::domain_error("preset mu1-lo: mu must be >= 1");
    const double en = std::exp(1.0) * static_cast<double>(n);
    const auto M = std::min<std::int64_t>(
        static_cast<std::int64_t>(std::ceil(static_cast<double>(n) / std::log(en))), mu);
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(n * M));
    for (std::int64_t a = 0; a < n; ++a) {
        const double decay =
            std::exp(static_cast<double>(a) * std::log1p(-1.0 / static_cast<double>(n)));
        for (std::int64_t b = 1; b < M; ++b)
            probs.push_back(static_cast<double>(b) / static_cast<double>(mu) * decay);
        probs.push_back(static_cast<double>(M) / static_cast<double>(mu) /
                        static_cast<double>(n) * decay);
    }
    return LevelSpec(std::move(probs));
}

LevelSpec preset_jump(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) throw std::domain_error("preset jump: k must lie in [1..n]");
    const double en = std::exp(1.0) * static_cast<double>(n);
    std::vector<double> probs;
    for (std::int64_t i = 1; i <= k - 1; ++i)
        probs.push_back(static_cast<double>(n - i) / en);
    for (std::int64_t i = 0; i <= n - k - 1; ++i)
        probs.push_back(static_cast<double>(n - i) / en);
    const double pk = std::pow(static_cast<double>(n), -static_cast<double>(k)) *
                      std::exp(static_cast<double>(n - k) *
                               std::log1p(-1.0 / static_cast<double>(n)));
    probs.push_back(pk);
    return LevelSpec(std::move(probs));
}

LevelSpec preset_general(std::int64_t n, double p) {
    if (n < 1) throw std::domain_error("preset general: n must be >= 1");
    if (!(p > 0.0) || p > 0.5)
        throw std::domain_error("preset general: p must lie in (0, 1/2]");
    const double pn = std::pow(p, static_cast<double>(n));
    if (!(pn > 0.0))
        throw std::domain_error("preset general: p^n underflows to zero");
    return LevelSpec({pn});
}

LevelSpec preset_eulerian(std::int64_t m) {
    if (m < 3) throw std::domain_error("preset eulerian: m must be >= 3");
    std::vector<double> probs;
    const double denom = 2.0 * std::exp(1.0) * static_cast<double>(m);
    for (std::int64_t i = 1; i <= m / 3; ++i)
        probs.push_back(static_cast<double>(i) / denom);
    return LevelSpec(std::move(probs));
}

LevelSpec preset_one_plus_lambda(std::int64_t n, std::int64_t lambda) {
    if (n < 2) throw std::domain_error("preset 1+lambda: n must be >= 2");
    if (lambda < 3) throw std::domain_error("preset 1+lambda: lambda must be >= 3");
    const double lam = static_cast<double>(lambda);
    const double lnl = std::log(lam);
    const double en = std::exp(1.0) * static_cast<double>(n);
    // t = floor((ln lambda - 1) / (2 ln ln lambda)) is 0 for small lambda;
    // clamped to 1 (single-level groups still leave with prob >= 1 - 1/e).
    auto t = static_cast<std::int64_t>(std::floor((lnl - 1.0) / (2.0 * std::log(lnl))));
    if (t < 1) t = 1;
    const auto L =
        static_cast<std::int64_t>(std::floor(static_cast<double>(n) - n / lnl));
    const auto groups = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(L) / static_cast<double>(t)));
    const auto singles = static_cast<std::int64_t>(std::ceil(n / lnl)) -
                         static_cast<std::int64_t>(std::ceil(en / lam)) + 1;
    const std::int64_t high_count = std::max<std::int64_t>(0, groups + singles);
    const auto low_count =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(en / lam - 1.0)));
    const double p0 = 1.0 - std::exp(-1.0);
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(high_count + low_count));
    for (std::int64_t i = 0; i < high_count; ++i) probs.push_back(p0);
    for (std::int64_t i = 1; i <= low_count; ++i)
        probs.push_back(0.5 * lam * static_cast<double>(i) / en);
    return LevelSpec(std::move(probs));
}

LevelSpec preset_sssp(std::int64_t n, std::int64_t ell) {
    const auto params = sssp_theorem_params(n, ell);
    return LevelSpec(std::vector<double>(static_cast<std::size_t>(ell), params.p));
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("preset: missing parameter --" + key);
    return it->second;
}

std::int64_t get_int_param(const std::map<std::string, double>& params,
                           const std::string& key) {
    return static_cast<std::int64_t>(get_param(params, key));
}

}  // namespace

PresetResult preset_by_id(const std::string& id,
                          const std::map<std::string, double>& params,
                          const std::optional<MutationOp>& op) {
    if (id == "onemax") return preset_onemax(get_int_param(params, "n"));
    if (id == "sorting") return preset_sorting(get_int_param(params, "n"));
    if (id == "mu1-lo")
        return preset_mu1_lo(get_int_param(params, "n"), get_int_param(params, "mu"));
    if (id == "jump")
        return preset_jump(get_int_param(params, "n"), get_int_param(params, "k"));
    if (id == "general")
        return preset_general(get_int_param(params, "n"), get_param(params, "p"));
    if (id == "eulerian") return preset_eulerian(get_int_param(params, "m"));
    if (id == "1+lambda")
        return preset_one_plus_lambda(get_int_param(params, "n"),
                                      get_int_param(params, "lambda"));
    if (id == "sssp")
        return preset_sssp(get_int_param(params, "n"), get_int_param(params, "ell"));
    if (id == "jump-lower")
        return jump_lower_spec(get_int_param(params, "n"), get_int_param(params, "k"));
    if (id == "lo-exact" || id == "lo-target") {
        if (!op) throw std::invalid_argument("preset " + id + ": requires --op");
        const auto n = get_int_param(params, "n");
        const auto q = lo_q_for_operator(*op, n);
        if (id == "lo-exact") return lo_exact_spec(q);
        return lo_target_spec(q, get_int_param(params, "a"));
    }
    if (id == "coupon") {
        const auto n = get_int_param(params, "n");
        const auto m = get_int_param(params, "m");
        const auto k = get_int_param(params, "k");
        if (k < 1 || k > n) throw std::domain_error("preset coupon: k must lie in [1..n]");
        if (m < 1) throw std::domain_error("preset coupon: m must be >= 1");
        std::vector<double> probs;
        probs.reserve(static_cast<std::size_t>(m * k));
        for (std::int64_t j = 0; j < m; ++j)
            for (std::int64_t i = 1; i <= k; ++i)
                probs.push_back(static_cast<double>(i) / static_cast<double>(n));
        return LevelSpec(std::move(probs));
    }
    std::string valid;
    for (const auto& known : preset_ids()) valid += (valid.empty() ? "" : ", ") + known;
    throw std::invalid_argument("unknown preset id '" + id + "' (valid: " + valid + ")");
}

std::vector<std::string> preset_ids() {
    return {"onemax", "sorting", "mu1-lo",     "jump",     "general",   "eulerian",
            "1+lambda", "sssp",   "jump-lower", "lo-exact", "lo-target", "coupon"};
}

GatedGeomSpec preset_spec(const PresetResult& preset) {
    if (const auto* levels = std::get_if<LevelSpec>(&preset))
        return fitness_level_spec(*levels);
    return std::get<GatedGeomSpec>(preset);
}

DiscreteDist rls_monotone_runtime_dist(std::int64_t n, double eps) {
    if (n < 1) throw std::domain_error("rls_monotone_runtime_dist: n must be >= 1");
    if (!(eps > 0.0) || eps > 0.1)
        throw std::domain_error("rls_monotone_runtime_dist: eps must lie in (0, 0.1]");
    const auto weights = binomial_pmf(n, 0.5);  // weights[m]: m initial zeros missing
    const double eps_term = eps / (2.0 * static_cast<double>(n));

    std::vector<double> partial{1.0};  // pmf of sum_{i=1..m} Geom(i/n), from k = m
    std::vector<double> mix;
    std::vector<double> scratch;
    mix.assign(1, 0.0);
    kernels::axpy(weights[0], partial, mix);
    for (std::int64_t m = 1; m <= n; ++m) {
        const double p = static_cast<double>(m) / static_cast<double>(n);
        std::int64_t K = 1;
        if (p < 1.0) {
            K = static_cast<std::int64_t>(std::ceil(std::log(eps_term) / std::log1p(-p)));
            if (K < 1) K = 1;
        }
        std::vector<double> geom(static_cast<std::size_t>(K));
        double mass = p;
        for (std::int64_t k = 0; k < K; ++k) {
            geom[static_cast<std::size_t>(k)] = mass;
            mass *= 1.0 - p;
        }
        scratch.assign(partial.size() + geom.size() - 1, 0.0);
        for (std::size_t j = 0; j < geom.size(); ++j)
            kernels::axpy(geom[j], partial,
                          std::span<double>(scratch).subspan(j, partial.size()));
        partial.swap(scratch);
        // The m-zero branch starts contributing at runtime k = m.
        const std::size_t lo = static_cast<std::size_t>(m);
        if (mix.size() < lo + partial.size()) mix.resize(lo + partial.size(), 0.0);
        kernels::axpy(weights[static_cast<std::size_t>(m)], partial,
                      std::span<double>(mix).subspan(lo, partial.size()));
    }
    const double tail = std::max(0.0, 1.0 - kernels::sum(mix));
    return DiscreteDist(0, std::move(mix), tail, eps);
}

}  // namespace domrt
