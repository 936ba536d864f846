#include "domrt/algorithms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "domrt/kernels.hpp"

namespace domrt {

MutationOp MutationOp::one_bit() { return MutationOp{}; }

MutationOp MutationOp::k_bit(int k) {
    MutationOp op;
    op.kind = Kind::k_bit;
    op.k = k;
    return op;
}

MutationOp MutationOp::standard_bit(double p) {
    MutationOp op;
    op.kind = Kind::standard_bit;
    op.rate = p;
    return op;
}

MutationOp MutationOp::position_dependent(std::vector<double> probs, bool per_bit) {
    MutationOp op;
    op.kind = Kind::position_dependent;
    op.probs = std::move(probs);
    op.per_bit = per_bit;
    return op;
}

MutationOp MutationOp::fitness_dependent_k() {
    MutationOp op;
    op.kind = Kind::fitness_dependent_k;
    return op;
}

MutationOp MutationOp::fitness_dependent_rate() {
    MutationOp op;
    op.kind = Kind::fitness_dependent_rate;
    return op;
}

MutationOp MutationOp::mixed_one_two(double P) {
    MutationOp op;
    op.kind = Kind::mixed_one_two;
    op.mix_p = P;
    return op;
}

MutationOp MutationOp::heavy_tailed(double beta) {
    MutationOp op;
    op.kind = Kind::heavy_tailed;
    op.beta = beta;
    return op;
}

void MutationOp::validate(std::size_t n) const {
    switch (kind) {
        case Kind::one_bit:
            return;
        case Kind::k_bit:
            if (k < 1 || static_cast<std::size_t>(k) > n)
                throw std::domain_error("k_bit: k must lie in [1..n]");
            return;
        case Kind::standard_bit:
            if (rate < 0.0 || rate > 1.0)
                throw std::domain_error("standard_bit: rate must lie in [0,1]");
            return;
        case Kind::position_dependent: {
            if (probs.size() != n)
                throw std::domain_error("position_dependent: need one probability per bit");
            double total = 0.0;
            for (double p : probs) {
                if (p < 0.0 || p > 1.0)
                    throw std::domain_error("position_dependent: probabilities in [0,1]");
                total += p;
            }
            if (!per_bit && total > 1.0 + 1e-12)
                throw std::domain_error(
                    "position_dependent: one-bit variant needs sum of probs <= 1");
            return;
        }
        case Kind::fitness_dependent_k:
        case Kind::fitness_dependent_rate:
            return;
        case Kind::mixed_one_two:
            if (mix_p < 0.0 || mix_p > 1.0)
                throw std::domain_error("mixed_one_two: P must lie in [0,1]");
            if (n < 2) throw std::domain_error("mixed_one_two: n must be >= 2");
            return;
        case Kind::heavy_tailed:
            if (!(beta > 1.0)) throw std::domain_error("heavy_tailed: beta must be > 1");
            return;
    }
}

std::string MutationOp::id() const {
    switch (kind) {
        case Kind::one_bit: return "onebit";
        case Kind::k_bit: return "kbit(" + std::to_string(k) + ")";
        case Kind::standard_bit: return "stdbit";
        case Kind::position_dependent: return per_bit ? "posdep-ea" : "posdep";
        case Kind::fitness_dependent_k: return "fitk";
        case Kind::fitness_dependent_rate: return "fitrate";
        case Kind::mixed_one_two: return "mixed";
        case Kind::heavy_tailed: return "heavy";
    }
    return "?";
}

namespace {

void random_bits(BitString& x, Rng& rng) {
    for (std::size_t i = 0; i < x.size(); ++i) x.set(i, (rng.next_u64() >> 63) != 0);
}

// Flips a uniform k-subset of positions. For k > n/2 the complement subset is
// drawn instead and the whole string is flipped first.
void flip_k_distinct(BitString& y, int k, Rng& rng) {
    const int n = static_cast<int>(y.size());
    if (k == n) {
        for (int i = 0; i < n; ++i) y.flip(static_cast<std::size_t>(i));
        return;
    }
    const bool complement = k > n / 2;
    const int m = complement ? n - k : k;
    if (complement)
        for (int i = 0; i < n; ++i) y.flip(static_cast<std::size_t>(i));
    int chosen[64];
    // Rejection over already-chosen indices; m <= n/2 keeps this fast.
    if (m <= 64) {
        for (int j = 0; j < m; ++j) {
            for (;;) {
                const int pos = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                bool dup = false;
                for (int t = 0; t < j; ++t)
                    if (chosen[t] == pos) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    chosen[j] = pos;
                    y.flip(static_cast<std::size_t>(pos));
                    break;
                }
            }
        }
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < m; ++j) {
        const auto r = static_cast<std::size_t>(
            rng.next_below(static_cast<std::uint64_t>(n - j)) + static_cast<std::uint64_t>(j));
        std::swap(idx[static_cast<std::size_t>(j)], idx[r]);
        y.flip(static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]));
    }
}

void standard_bit_into(BitString& y, double p, Rng& rng) {
    const auto n = static_cast<std::int64_t>(y.size());
    const int flips = static_cast<int>(rng.binomial(n, p));
    if (flips > 0) flip_k_distinct(y, flips, rng);
}

int draw_heavy_alpha(int n, double beta, Rng& rng) {
    const int amax = std::max(1, n / 2);
    double norm = 0.0;
    for (int a = 1; a <= amax; ++a) norm += std::pow(static_cast<double>(a), -beta);
    double u = rng.next_unit() * norm;
    for (int a = 1; a <= amax; ++a) {
        u -= std::pow(static_cast<double>(a), -beta);
        if (u < 0.0) return a;
    }
    return amax;
}

}  // namespace

void mutate_into(const BitString& x, const MutationOp& op, std::int64_t current_fitness,
                 Rng& rng, BitString& y) {
    const auto n = static_cast<int>(x.size());
    op.validate(x.size());
    y = x;
    switch (op.kind) {
        case MutationOp::Kind::one_bit:
            y.flip(static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n))));
            return;
        case MutationOp::Kind::k_bit:
            flip_k_distinct(y, op.k, rng);
            return;
        case MutationOp::Kind::standard_bit:
            standard_bit_into(y, op.rate, rng);
            return;
        case MutationOp::Kind::position_dependent: {
            if (op.per_bit) {
                for (int i = 0; i < n; ++i)
                    if (rng.next_unit() < op.probs[static_cast<std::size_t>(i)])
                        y.flip(static_cast<std::size_t>(i));
            } else {
                double u = rng.next_unit();
                for (int i = 0; i < n; ++i) {
                    u -= op.probs[static_cast<std::size_t>(i)];
                    if (u < 0.0) {
                        y.flip(static_cast<std::size_t>(i));
                        break;
                    }
                }
            }
            return;
        }
        case MutationOp::Kind::fitness_dependent_k: {
            const auto i = std::clamp<std::int64_t>(current_fitness, 0, n - 1);
            const int k = std::clamp(static_cast<int>(n / (i + 1)), 1, n);
            flip_k_distinct(y, k, rng);
            return;
        }
        case MutationOp::Kind::fitness_dependent_rate: {
            const auto i = std::clamp<std::int64_t>(current_fitness, 0, n - 1);
            standard_bit_into(y, 1.0 / static_cast<double>(i + 1), rng);
            return;
        }
        case MutationOp::Kind::mixed_one_two:
            flip_k_distinct(y, rng.next_unit() < op.mix_p ? 1 : 2, rng);
            return;
        case MutationOp::Kind::heavy_tailed: {
            const int alpha = draw_heavy_alpha(n, op.beta, rng);
            standard_bit_into(y, static_cast<double>(alpha) / static_cast<double>(n), rng);
            return;
        }
    }
}

BitString mutate(const BitString& x, const MutationOp& op, std::int64_t current_fitness,
                 Rng& rng) {
    BitString y(x.size());
    mutate_into(x, op, current_fitness, rng, y);
    return y;
}

std::string_view metric_id(Metric m) {
    return m == Metric::iterations ? "iterations" : "evaluations";
}

double SampleSet::mean() const {
    std::vector<double> v(values.begin(), values.end());
    return kernels::sum(v) / static_cast<double>(values.size());
}

double SampleSet::sample_variance() const {
    const double m = mean();
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = static_cast<double>(values[i]) - m;
        sq[i] = d * d;
    }
    return kernels::sum(sq) / static_cast<double>(values.size() - 1);
}

double SampleSet::ecdf(std::int64_t x) const {
    const auto it = std::upper_bound(values.begin(), values.end(), x);
    return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

BitBench make_bit_bench(const std::string& id, int n, int jump_k) {
    if (id == "onemax") return {id, [](const BitString& x) { return onemax(x); }, n};
    if (id == "leadingones")
        return {id, [](const BitString& x) { return leadingones(x); }, n};
    if (id == "jump") {
        if (jump_k < 1 || jump_k > n) throw std::domain_error("jump: k must lie in [1..n]");
        return {id, [jump_k](const BitString& x) { return jump(x, jump_k); }, n + jump_k};
    }
    if (id == "constant") return {id, [](const BitString&) { return std::int64_t{0}; }, 1};
    std::string valid = "onemax, leadingones, jump, constant";
    throw std::invalid_argument("unknown bench id '" + id + "' (valid: " + valid + ")");
}

RunRecord run_one_plus_one(const BitBench& bench, const MutationOp& op, int n,
                           std::uint64_t seed, std::int64_t budget) {
    if (budget < 1) throw std::domain_error("run_one_plus_one: budget must be >= 1");
    op.validate(static_cast<std::size_t>(n));
    Rng rng(seed);
    RunRecord rec{"one_plus_one[" + op.id() + "]", bench.id, n, seed, 0, 0, false, budget};
    BitString x(static_cast<std::size_t>(n));
    random_bits(x, rng);
    std::int64_t fx = bench.eval(x);
    if (fx == bench.opt_value) {
        rec.evaluations = 1;
        return rec;
    }
    BitString y(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= budget; ++t) {
        mutate_into(x, op, fx, rng, y);
        const std::int64_t fy = bench.eval(y);
        if (fy == bench.opt_value) {
            rec.iterations = t;
            rec.evaluations = t + 1;
            return rec;
        }
        if (fy >= fx) {
            std::swap(x, y);
            fx = fy;
        }
    }
    rec.iterations = budget;
    rec.evaluations = budget + 1;
    rec.censored = true;
    return rec;
}

RunRecord run_random_search(const BitBench& bench, int n, std::uint64_t seed,
                            std::int64_t budget) {
    if (budget < 1) throw std::domain_error("run_random_search: budget must be >= 1");
    Rng rng(seed);
    RunRecord rec{"random_search", bench.id, n, seed, 0, 0, false, budget};
    BitString x(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t <= budget; ++t) {
        random_bits(x, rng);
        if (bench.eval(x) == bench.opt_value) {
            rec.iterations = t;
            rec.evaluations = t + 1;
            return rec;
        }
        if (t == budget) break;
    }
    rec.iterations = budget;
    rec.evaluations = budget + 1;
    rec.censored = true;
    return rec;
}

RunRecord run_mu_plus_one(const BitBench& bench, int mu, double p, int n,
                          std::uint64_t seed, std::int64_t budget) {
    if (mu < 1) throw std::domain_error("run_mu_plus_one: mu must be >= 1");
    Rng rng(seed);
    RunRecord rec{"mu_plus_one", bench.id, n, seed, 0, 0, false, budget};
    const MutationOp op = MutationOp::standard_bit(p);
    std::vector<std::pair<std::int64_t, BitString>> pop;
    pop.reserve(static_cast<std::size_t>(mu));
    // Initial individuals are generated sequentially; an optimal one ends the
    // run with its evaluation index.
    for (int j = 1; j <= mu; ++j) {
        BitString x(static_cast<std::size_t>(n));
        random_bits(x, rng);
        const std::int64_t f = bench.eval(x);
        if (f == bench.opt_value) {
            rec.evaluations = j;
            return rec;
        }
        pop.emplace_back(f, std::move(x));
    }
    BitString y(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= budget; ++t) {
        const auto parent = rng.next_below(static_cast<std::uint64_t>(mu));
        mutate_into(pop[parent].second, op, pop[parent].first, rng, y);
        const std::int64_t fy = bench.eval(y);
        if (fy == bench.opt_value) {
            rec.iterations = t;
            rec.evaluations = mu + t;
            return rec;
        }
        // Replace a uniformly chosen worst individual if not worse than it.
        std::int64_t fmin = pop[0].first;
        for (const auto& ind : pop) fmin = std::min(fmin, ind.first);
        if (fy >= fmin) {
            std::uint64_t ties = 0;
            std::size_t slot = 0;
            for (std::size_t i = 0; i < pop.size(); ++i) {
                if (pop[i].first == fmin) {
                    ++ties;
                    if (rng.next_below(ties) == 0) slot = i;
                }
            }
            pop[slot].first = fy;
            std::swap(pop[slot].second, y);
        }
    }
    rec.iterations = budget;
    rec.evaluations = mu + budget;
    rec.censored = true;
    return rec;
}

RunRecord run_one_plus_lambda(const BitBench& bench, int lambda, double p, int n,
                              std::uint64_t seed, std::int64_t budget) {
    if (lambda < 1) throw std::domain_error("run_one_plus_lambda: lambda must be >= 1");
    Rng rng(seed);
    RunRecord rec{"one_plus_lambda", bench.id, n, seed, 0, 0, false, budget};
    const MutationOp op = MutationOp::standard_bit(p);
    BitString x(static_cast<std::size_t>(n));
    random_bits(x, rng);
    std::int64_t fx = bench.eval(x);
    if (fx == bench.opt_value) {
        rec.evaluations = 1;
        return rec;
    }
    BitString y(static_cast<std::size_t>(n));
    BitString best(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= budget; ++t) {
        bool have_best = false;
        std::int64_t best_f = 0;
        std::uint64_t ties = 0;
        bool optimum = false;
        for (int j = 0; j < lambda; ++j) {
            mutate_into(x, op, fx, rng, y);
            const std::int64_t fy = bench.eval(y);
            if (fy == bench.opt_value) optimum = true;
            if (!have_best || fy > best_f) {
                best_f = fy;
                ties = 1;
                std::swap(best, y);
                have_best = true;
            } else if (fy == best_f) {
                ++ties;
                if (rng.next_below(ties) == 0) std::swap(best, y);
            }
        }
        if (optimum) {
            rec.iterations = t;
            rec.evaluations = 1 + static_cast<std::int64_t>(lambda) * t;
            return rec;
        }
        if (best_f >= fx) {
            std::swap(x, best);
            fx = best_f;
        }
    }
    rec.iterations = budget;
    rec.evaluations = 1 + static_cast<std::int64_t>(lambda) * budget;
    rec.censored = true;
    return rec;
}

RunRecord run_ollga(const BitBench& bench, int lambda, int n, std::uint64_t seed,
                    std::int64_t budget) {
    if (lambda < 1) throw std::domain_error("run_ollga: lambda must be >= 1");
    if (lambda > n) throw std::domain_error("run_ollga: lambda must be <= n");
    Rng rng(seed);
    RunRecord rec{"ollga", bench.id, n, seed, 0, 0, false, budget};
    const double p = static_cast<double>(lambda) / static_cast<double>(n);
    const double c = 1.0 / static_cast<double>(lambda);
    BitString x(static_cast<std::size_t>(n));
    random_bits(x, rng);
    std::int64_t fx = bench.eval(x);
    if (fx == bench.opt_value) {
        rec.evaluations = 1;
        return rec;
    }
    BitString y(static_cast<std::size_t>(n));
    BitString best(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= budget; ++t) {
        bool optimum = false;
        // Mutation phase: lambda mutants, each flipping exactly ell bits.
        const int ell = static_cast<int>(rng.binomial(n, p));
        std::int64_t best_f = 0;
        std::uint64_t ties = 0;
        bool have_best = false;
        for (int j = 0; j < lambda; ++j) {
            y = x;
            if (ell > 0) flip_k_distinct(y, ell, rng);
            const std::int64_t fy = bench.eval(y);
            if (fy == bench.opt_value) optimum = true;
            if (!have_best || fy > best_f) {
                best_f = fy;
                ties = 1;
                std::swap(best, y);
                have_best = true;
            } else if (fy == best_f) {
                ++ties;
                if (rng.next_below(ties) == 0) std::swap(best, y);
            }
        }
        // Crossover phase: bits from the best mutant with bias c.
        BitString xprime = best;
        std::int64_t cross_f = 0;
        ties = 0;
        have_best = false;
        for (int j = 0; j < lambda; ++j) {
            y = x;
            for (int i = 0; i < n; ++i)
                if (rng.next_unit() < c) y.set(static_cast<std::size_t>(i),
                                               xprime.get(static_cast<std::size_t>(i)));
            const std::int64_t fy = bench.eval(y);
            if (fy == bench.opt_value) optimum = true;
            if (!have_best || fy > cross_f) {
                cross_f = fy;
                ties = 1;
                std::swap(best, y);
                have_best = true;
            } else if (fy == cross_f) {
                ++ties;
                if (rng.next_below(ties) == 0) std::swap(best, y);
            }
        }
        if (optimum) {
            rec.iterations = t;
            rec.evaluations = 1 + 2 * static_cast<std::int64_t>(lambda) * t;
            return rec;
        }
        if (cross_f >= fx) {
            std::swap(x, best);
            fx = cross_f;
        }
    }
    rec.iterations = budget;
    rec.evaluations = 1 + 2 * static_cast<std::int64_t>(lambda) * budget;
    rec.censored = true;
    return rec;
}

RunRecord run_ea_best_of_mu(const BitBench& bench, int mu, double p, int n,
                            std::uint64_t seed, std::int64_t budget) {
    if (mu < 1) throw std::domain_error("run_ea_best_of_mu: mu must be >= 1");
    Rng rng(seed);
    RunRecord rec{"ea_best_of_mu", bench.id, n, seed, 0, 0, false, budget};
    const MutationOp op = MutationOp::standard_bit(p);
    BitString x(static_cast<std::size_t>(n));
    std::int64_t fx = 0;
    BitString cand(static_cast<std::size_t>(n));
    std::uint64_t ties = 0;
    for (int j = 1; j <= mu; ++j) {
        random_bits(cand, rng);
        const std::int64_t f = bench.eval(cand);
        if (f == bench.opt_value) {
            rec.evaluations = j;
            return rec;
        }
        if (j == 1 || f > fx) {
            fx = f;
            ties = 1;
            std::swap(x, cand);
        } else if (f == fx) {
            ++ties;
            if (rng.next_below(ties) == 0) std::swap(x, cand);
        }
    }
    BitString y(static_cast<std::size_t>(n));
    for (std::int64_t t = 1; t <= budget; ++t) {
        mutate_into(x, op, fx, rng, y);
        const std::int64_t fy = bench.eval(y);
        if (fy == bench.opt_value) {
            rec.iterations = t;
            rec.evaluations = mu + t;
            return rec;
        }
        if (fy >= fx) {
            std::swap(x, y);
            fx = fy;
        }
    }
    rec.iterations = budget;
    rec.evaluations = mu + budget;
    rec.censored = true;
    return rec;
}

RunRecord run_sssp_ea(const WeightedGraph& g, std::uint64_t seed, std::int64_t budget,
                      SsspOptions opts) {
    Rng rng(seed);
    const int n = g.n();
    RunRecord rec{"sssp_ea", "sssp", n, seed, 0, 0, false, budget};
    const std::vector<std::int64_t> target = dijkstra_distances(g);

    std::vector<int> non_source;
    for (int v = 0; v < n; ++v)
        if (v != g.source()) non_source.push_back(v);
    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.edge_weight(u, v) != kInfiniteFitness)
                neighbours[static_cast<std::size_t>(u)].push_back(v);

    auto retarget = [&](PointerArray& ind, int v) {
        const auto& nb = neighbours[static_cast<std::size_t>(v)];
        for (;;) {
            int tgt;
            if (opts.adjacency_restricted) {
                tgt = nb[rng.next_below(nb.size())];
            } else {
                tgt = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
                if (tgt == v) continue;
            }
            if (opts.retarget_excludes_current && tgt == ind[static_cast<std::size_t>(v)])
                continue;
            ind[static_cast<std::size_t>(v)] = tgt;
            return;
        }
    };

    PointerArray ptr(static_cast<std::size_t>(n), g.source());
    for (int v : non_source) retarget(ptr, v);
    std::vector<std::int64_t> fit = sssp_fitness(g, ptr);
    if (fit == target) {
        rec.evaluations = 1;
        return rec;
    }
    PointerArray child = ptr;
    for (std::int64_t t = 1; t <= budget; ++t) {
        child = ptr;
        const std::int64_t moves = rng.poisson1() + 1;
        for (std::int64_t j = 0; j < moves; ++j)
            retarget(child, non_source[rng.next_below(non_source.size())]);
        const std::vector<std::int64_t> fc = sssp_fitness(g, child);
        if (fc == target) {
            rec.iterations = t;
            rec.evaluations = t + 1;
            return rec;
        }
        if (vector_at_least_as_good(fc, fit)) {
            ptr = child;
            fit = fc;
        }
    }
    rec.iterations = budget;
    rec.evaluations = budget + 1;
    rec.censored = true;
    return rec;
}

RunRecord run_sorting_ea(int n, std::uint64_t seed, std::int64_t budget) {
    if (n < 2) throw std::domain_error("run_sorting_ea: n must be >= 2");
    Rng rng(seed);
    RunRecord rec{"sorting_ea", "sorting", n, seed, 0, 0, false, budget};
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        const auto j = rng.next_below(static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    std::int64_t f = inversions(perm);
    if (f == 0) {
        rec.evaluations = 1;
        return rec;
    }
    std::vector<int> child;
    for (std::int64_t t = 1; t <= budget; ++t) {
        child = perm;
        const std::int64_t exchanges = rng.poisson1() + 1;
        for (std::int64_t j = 0; j < exchanges; ++j) {
            const auto a = rng.next_below(static_cast<std::uint64_t>(n));
            auto b = rng.next_below(static_cast<std::uint64_t>(n - 1));
            if (b >= a) ++b;
            std::swap(child[a], child[b]);
        }
        const std::int64_t fc = inversions(child);
        if (fc == 0) {
            rec.iterations = t;
            rec.evaluations = t + 1;
            return rec;
        }
        if (fc <= f) {
            perm.swap(child);
            f = fc;
        }
    }
    rec.iterations = budget;
    rec.evaluations = budget + 1;
    rec.censored = true;
    return rec;
}

std::vector<std::string> known_algo_ids() {
    return {"rls", "ea", "rs", "mu1", "1+lambda", "ollga", "ea-mu", "sssp", "sorting"};
}

std::vector<std::string> known_bench_ids() {
    return {"onemax", "leadingones", "jump", "sorting", "sssp", "constant"};
}

RunRecord run_once(const SimConfig& config, std::uint64_t seed) {
    const double rate =
        config.rate < 0.0 ? 1.0 / static_cast<double>(config.n) : config.rate;
    RunRecord rec;
    if (config.algo == "sssp") {
        if (!config.graph) throw std::invalid_argument("sssp: --graph file required");
        rec = run_sssp_ea(*config.graph, seed, config.budget);
    } else if (config.algo == "sorting") {
        rec = run_sorting_ea(config.n, seed, config.budget);
    } else {
        const BitBench bench = make_bit_bench(config.bench, config.n, config.jump_k);
        if (config.algo == "rls") {
            rec = run_one_plus_one(bench, config.op.value_or(MutationOp::one_bit()),
                                   config.n, seed, config.budget);
        } else if (config.algo == "ea") {
            rec = run_one_plus_one(bench,
                                   config.op.value_or(MutationOp::standard_bit(rate)),
                                   config.n, seed, config.budget);
        } else if (config.algo == "rs") {
            rec = run_random_search(bench, config.n, seed, config.budget);
        } else if (config.algo == "mu1") {
            rec = run_mu_plus_one(bench, config.mu, rate, config.n, seed, config.budget);
        } else if (config.algo == "1+lambda") {
            rec = run_one_plus_lambda(bench, config.lambda, rate, config.n, seed,
                                      config.budget);
        } else if (config.algo == "ollga") {
            rec = run_ollga(bench, config.lambda, config.n, seed, config.budget);
        } else if (config.algo == "ea-mu") {
            rec = run_ea_best_of_mu(bench, config.mu, rate, config.n, seed,
                                    config.budget);
        } else {
            std::string valid;
            for (const auto& id : known_algo_ids()) valid += (valid.empty() ? "" : ", ") + id;
            throw std::invalid_argument("unknown algo id '" + config.algo +
                                        "' (valid: " + valid + ")");
        }
    }
    rec.algo_id = config.algo;
    return rec;
}

namespace {

std::size_t worker_count(std::size_t runs) {
    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<std::size_t>(workers, 8);
    if (const char* env = std::getenv("DOMRT_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) workers = static_cast<std::size_t>(parsed);
    }
    return std::min(workers, runs);
}

}  // namespace

std::vector<RunRecord> collect_records(const SimConfig& config, std::size_t runs,
                                       std::uint64_t master_seed) {
    if (runs < 1) throw std::domain_error("collect_records: runs must be >= 1");
    std::vector<RunRecord> records(runs);
    const std::size_t workers = worker_count(runs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < runs; ++i)
            records[i] = run_once(config, derive_seed(master_seed, i));
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= runs || failed.load()) return;
            try {
                records[i] = run_once(config, derive_seed(master_seed, i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return records;
}

SampleSet collect_samples(const SimConfig& config, std::size_t runs,
                          std::uint64_t master_seed, Metric metric) {
    const auto records = collect_records(config, runs, master_seed);
    std::int64_t censored = 0;
    for (const auto& r : records) censored += r.censored ? 1 : 0;
    if (censored > 0) throw CensoredRunsError(censored);
    SampleSet set;
    set.values.reserve(runs);
    for (const auto& r : records)
        set.values.push_back(metric == Metric::iterations ? r.iterations : r.evaluations);
    std::sort(set.values.begin(), set.values.end());
    set.n_samples = runs;
    set.metric = metric;
    set.algo_id = config.algo;
    set.bench_id = config.algo == "sssp" || config.algo == "sorting" ? config.algo
                                                                     : config.bench;
    set.n = config.n;
    set.master_seed = master_seed;
    return set;
}

void write_csv(std::ostream& os, const SampleSet& samples,
               std::span<const std::pair<std::string, std::string>> extra) {
    os << "# algo=" << samples.algo_id << "\n";
    os << "# bench=" << samples.bench_id << "\n";
    os << "# n=" << samples.n << "\n";
    os << "# metric=" << metric_id(samples.metric) << "\n";
    os << "# master_seed=" << samples.master_seed << "\n";
    os << "# n_samples=" << samples.n_samples << "\n";
    os << "# rng=" << kRngId << "\n";
    for (const auto& [key, value] : extra) os << "# " << key << "=" << value << "\n";
    os << "runtime\n";
    for (const auto v : samples.values) os << v << "\n";
}

SampleSet read_sample_set_csv(std::istream& is) {
    SampleSet set;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            const std::string value = line.substr(eq + 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            if (key == "algo") set.algo_id = value;
            else if (key == "bench") set.bench_id = value;
            else if (key == "n") set.n = std::stoi(value);
            else if (key == "metric")
                set.metric = value == "evaluations" ? Metric::evaluations : Metric::iterations;
            else if (key == "master_seed") set.master_seed = std::stoull(value);
            else if (key == "censored" && std::stoll(value) > 0)
                throw CensoredRunsError(std::stoll(value));
            continue;
        }
        if (!header_seen) {
            if (line.rfind("runtime", 0) != 0)
                throw std::runtime_error("SampleSet csv: bad header '" + line + "'");
            header_seen = true;
            continue;
        }
        set.values.push_back(std::stoll(line));
    }
    if (!header_seen || set.values.empty())
        throw std::runtime_error("SampleSet csv: no data rows");
    std::sort(set.values.begin(), set.values.end());
    set.n_samples = set.values.size();
    return set;
}

}  // namespace domrt
