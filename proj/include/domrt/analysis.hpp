#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domrt/algorithms.hpp"
#include "domrt/dist_core.hpp"

namespace domrt {

/// Per-level improvement probabilities p_1..p_{m-1} for the fitness level
/// method.
struct LevelSpec {
    std::vector<double> probs;

    explicit LevelSpec(std::vector<double> p);
};

/// T is dominated by the sum of independent Geom(p_i): gates 1, offset 0.
GatedGeomSpec fitness_level_spec(const LevelSpec& levels);

/// Probability that flipping k random bits improves a LeadingOnes value of i:
/// k(n-i-1)...(n-i-k+1) / (n(n-1)...(n-k+1)) = C(n-i-1,k-1)/C(n,k).
double q_kbit(std::int64_t n, std::int64_t k, std::int64_t i);

/// Optimal number of bits to flip at fitness i: floor(n/(i+1)).
std::int64_t optimal_k(std::int64_t n, std::int64_t i);

/// Exact runtime law of any (1+1) algorithm on LeadingOnes: gates 1/2 over
/// the improvement probabilities q_0..q_{n-1}. Throws InfiniteRuntimeError
/// when some q_i is zero.
GatedGeomSpec lo_exact_spec(std::span<const double> q);

/// Time-to-target variant: only levels below a contribute.
GatedGeomSpec lo_target_spec(std::span<const double> q, std::int64_t a);

/// Exact per-level improvement probabilities of a mutation operator on
/// LeadingOnes (q_i for fitness i in [0..n-1]).
std::vector<double> lo_q_for_operator(const MutationOp& op, std::int64_t n);

/// Exact expected (1+1) EA runtime on LeadingOnes at mutation rate p:
/// (1/(2p^2))((1-p)^{1-n} - (1-p)).
double lo_ea_expected_runtime(std::int64_t n, double p);

/// Static rate minimizing the closed form over (0, 1/2], by golden-section
/// search to relative tolerance 1e-6 (unimodality assumed).
double optimal_static_rate(std::int64_t n);

struct UnbiasedAudit {
    double expected_runtime;  // +infinity when some level is unreachable
    bool lower_bound_holds;   // expected >= 0.5 n^2 - 1e-6
};

/// Expected LeadingOnes runtime of the static unbiased operator mixing k-bit
/// flips with weights r_0..r_n; also checks the sum identity of the level
/// probabilities.
UnbiasedAudit static_unbiased_audit(std::int64_t n, std::span<const double> r);

/// Exact offspring one-count domination under standard-bit mutation:
/// |x'|_1 dominated by |y'|_1 whenever |x|_1 = a <= b = |y|_1.
bool mutation_monotone_check(std::int64_t n, double p, std::int64_t a, std::int64_t b);

/// Step CDF with a confidence band; the common currency of the empirical
/// domination test.
struct StepCdf {
    std::vector<std::int64_t> xs;  // ascending jump points
    std::vector<double> cdf;       // value at and after xs[i]
    double band = 0.0;
};

/// Two-sided DKW band epsilon = sqrt(ln(2/alpha) / (2 N)).
double dkw_band(double alpha, std::size_t n_samples);

StepCdf to_step_cdf(const SampleSet& samples, double alpha);
StepCdf to_step_cdf(const DiscreteDist& dist);

struct EmpiricalVerdict {
    bool consistent = true;
    std::int64_t at = 0;
    double gap = 0.0;  // F_b(at) - F_a(at) when refuted
};

/// Statistical test of "a is dominated by b": refuted iff some lambda has
/// F_a(lambda) + band_a < F_b(lambda) - band_b. Consistency is not a proof.
EmpiricalVerdict empirical_dominates(const StepCdf& a, const StepCdf& b);

struct CdfGap {
    double gap;
    std::int64_t at;
};

/// max over lambda of F_b(lambda) - F_a(lambda); the amount by which b's CDF
/// rises above a's (positive values work against "a dominated by b").
CdfGap max_cdf_upshift(const StepCdf& a, const StepCdf& b);

/// max over lambda of |F_a(lambda) - F_b(lambda)|.
double max_cdf_discrepancy(const StepCdf& a, const StepCdf& b);
EmpiricalVerdict empirical_dominates(const SampleSet& a, const SampleSet& b, double alpha);
EmpiricalVerdict empirical_dominates(const SampleSet& a, const DiscreteDist& b, double alpha);
EmpiricalVerdict empirical_dominates(const DiscreteDist& a, const SampleSet& b, double alpha);

enum class CounterExample { rs_le2, ea_le2, fitprop };

/// Closed-form counter-example probabilities: Pr[T <= 2] for random search
/// (2^{-n+1} - 2^{-2n}) and the (1+1) EA (2^{-n+1} - (1-1/n)^n 2^{-n}), and
/// the fitness-proportionate selection probability 9/(mu+8).
double counterexample_probs(CounterExample which, std::int64_t param);

/// Mass of individuals with fitness >= threshold under fitness-proportionate
/// selection.
double fitprop_select_prob(std::span<const double> fitnesses, double threshold);

struct SsspTheoremParams {
    double delta;
    double p;
    double t0;
    double mean_bound;
    std::int64_t n;

    /// Pr[T >= (1+eps) T0] <= (n-1)^{-eps}.
    double tail(double eps) const;
};
SsspTheoremParams sssp_theorem_params(std::int64_t n, std::int64_t ell);

/// Lower-side dominating spec for the (1+1) EA on Jump_k:
/// gate 1 - exp(-n/8), success n^{-k}(1-1/n)^{n-k}.
GatedGeomSpec jump_lower_spec(std::int64_t n, std::int64_t k);

// Presets: the paper's dominating distributions by stable id.

LevelSpec preset_onemax(std::int64_t n);
LevelSpec preset_sorting(std::int64_t n);
LevelSpec preset_mu1_lo(std::int64_t n, std::int64_t mu);
LevelSpec preset_jump(std::int64_t n, std::int64_t k);
LevelSpec preset_general(std::int64_t n, double p);
LevelSpec preset_eulerian(std::int64_t m);
LevelSpec preset_one_plus_lambda(std::int64_t n, std::int64_t lambda);
/// Per-vertex dominating sum for the SSSP EA: ell independent Geom(p).
LevelSpec preset_sssp(std::int64_t n, std::int64_t ell);

using PresetResult = std::variant<LevelSpec, GatedGeomSpec>;

/// CLI-facing registry. Ids: onemax, sorting, mu1-lo, jump, general, eulerian,
/// 1+lambda, sssp, jump-lower, lo-exact, lo-target, coupon.
PresetResult preset_by_id(const std::string& id,
                          const std::map<std::string, double>& params);
std::vector<std::string> preset_ids();

/// Any preset as a gated-geometric spec.
GatedGeomSpec preset_spec(const PresetResult& preset);

/// Exact runtime distribution of RLS on a strictly monotonic function:
/// binomial mixture over coupon-collector sums (the initial one-count gates
/// the partial sums, which are not independent term-wise).
DiscreteDist rls_monotone_runtime_dist(std::int64_t n, double eps);

/// Exact Binomial(n,p) PMF over 0..n.
std::vector<double> binomial_pmf(std::int64_t n, double p);

}  // namespace domrt
