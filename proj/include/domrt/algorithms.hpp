#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "domrt/benchmarks.hpp"
#include "domrt/errors.hpp"
#include "domrt/rng.hpp"

namespace domrt {

/// Tagged description of a mutation operator.
struct MutationOp {
    enum class Kind {
        one_bit,
        k_bit,
        standard_bit,
        position_dependent,
        fitness_dependent_k,     // flips floor(n/(i+1)) bits at fitness i
        fitness_dependent_rate,  // standard-bit with rate 1/(i+1) at fitness i
        mixed_one_two,           // 1 bit w.p. P, else 2 distinct bits
        heavy_tailed,            // standard-bit with rate a/n, a ~ power-law(beta)
    };

    Kind kind = Kind::one_bit;
    int k = 1;                          // k_bit
    double rate = 0.0;                  // standard_bit
    std::vector<double> probs;          // position_dependent
    bool per_bit = false;               // position_dependent: EA variant
    double mix_p = 0.5;                 // mixed_one_two
    double beta = 1.5;                  // heavy_tailed, > 1

    static MutationOp one_bit();
    static MutationOp k_bit(int k);
    static MutationOp standard_bit(double p);
    static MutationOp position_dependent(std::vector<double> probs, bool per_bit);
    static MutationOp fitness_dependent_k();
    static MutationOp fitness_dependent_rate();
    static MutationOp mixed_one_two(double P);
    static MutationOp heavy_tailed(double beta);

    void validate(std::size_t n) const;
    std::string id() const;
};

/// Offspring of x under op; parent unchanged. Fitness-dependent variants read
/// current_fitness.
BitString mutate(const BitString& x, const MutationOp& op, std::int64_t current_fitness,
                 Rng& rng);

/// In-place variant used by the run loops: y := mutate(x).
void mutate_into(const BitString& x, const MutationOp& op, std::int64_t current_fitness,
                 Rng& rng, BitString& y);

/// One simulated run.
struct RunRecord {
    std::string algo_id;
    std::string bench_id;
    int n = 0;
    std::uint64_t seed = 0;
    std::int64_t iterations = 0;   // iteration index generating the first optimum
    std::int64_t evaluations = 0;  // counting initial individuals
    bool censored = false;
    std::int64_t budget = 0;
    std::string rng_id = std::string(kRngId);
};

enum class Metric { iterations, evaluations };
std::string_view metric_id(Metric m);

/// Sorted, uncensored runtime samples with provenance metadata.
struct SampleSet {
    std::vector<std::int64_t> values;  // ascending
    std::size_t n_samples = 0;
    Metric metric = Metric::iterations;
    std::string algo_id;
    std::string bench_id;
    int n = 0;
    std::uint64_t master_seed = 0;

    double mean() const;
    double sample_variance() const;
    /// Empirical CDF at x (right-continuous step function).
    double ecdf(std::int64_t x) const;
};

/// Objective wrapper used by the bit-string runners.
struct BitBench {
    std::string id;
    std::function<std::int64_t(const BitString&)> eval;
    std::int64_t opt_value = 0;
};

/// Built-in benches: "onemax", "leadingones", "jump" (uses jump_k), "constant".
BitBench make_bit_bench(const std::string& id, int n, int jump_k = 2);

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

RunRecord run_one_plus_one(const BitBench& bench, const MutationOp& op, int n,
                           std::uint64_t seed, std::int64_t budget = kDefaultBudget);
RunRecord run_random_search(const BitBench& bench, int n, std::uint64_t seed,
                            std::int64_t budget = kDefaultBudget);
RunRecord run_mu_plus_one(const BitBench& bench, int mu, double p, int n,
                          std::uint64_t seed, std::int64_t budget = kDefaultBudget);
RunRecord run_one_plus_lambda(const BitBench& bench, int lambda, double p, int n,
                              std::uint64_t seed, std::int64_t budget = kDefaultBudget);
RunRecord run_ollga(const BitBench& bench, int lambda, int n, std::uint64_t seed,
                    std::int64_t budget = kDefaultBudget);
RunRecord run_ea_best_of_mu(const BitBench& bench, int mu, double p, int n,
                            std::uint64_t seed, std::int64_t budget = kDefaultBudget);

struct SsspOptions {
    bool adjacency_restricted = false;   // retarget only among graph neighbours
    bool retarget_excludes_current = false;
};
RunRecord run_sssp_ea(const WeightedGraph& g, std::uint64_t seed,
                      std::int64_t budget = kDefaultBudget, SsspOptions opts = {});

/// (1+1) EA minimizing inversions with Poisson(1)+1 random exchanges.
RunRecord run_sorting_ea(int n, std::uint64_t seed,
                         std::int64_t budget = kDefaultBudget);

/// Everything needed to reproduce one run; the CLI fills this from flags.
struct SimConfig {
    std::string algo;   // rls | ea | rs | mu1 | 1+lambda | ollga | ea-mu | sssp | sorting
    std::string bench;  // onemax | leadingones | jump | sorting | sssp
    int n = 10;
    std::int64_t budget = kDefaultBudget;
    std::optional<MutationOp> op;  // rls/ea override; default one_bit / standard_bit(1/n)
    int mu = 1;
    int lambda = 1;
    double rate = -1.0;  // <0 means 1/n
    int jump_k = 2;
    std::optional<WeightedGraph> graph;
};

std::vector<std::string> known_algo_ids();
std::vector<std::string> known_bench_ids();

RunRecord run_once(const SimConfig& config, std::uint64_t seed);

/// N independent runs with per-trial seeds derived from (master_seed, index).
/// Trials may execute concurrently (DOMRT_THREADS caps the worker count);
/// results are independent of scheduling order.
std::vector<RunRecord> collect_records(const SimConfig& config, std::size_t runs,
                                       std::uint64_t master_seed);

/// Sorted SampleSet; throws CensoredRunsError if any run was censored.
SampleSet collect_samples(const SimConfig& config, std::size_t runs,
                          std::uint64_t master_seed, Metric metric);

/// CSV: "# key=value" comments, header "runtime", one value per line.
void write_csv(std::ostream& os, const SampleSet& samples,
               std::span<const std::pair<std::string, std::string>> extra = {});
SampleSet read_sample_set_csv(std::istream& is);

}  // namespace domrt
