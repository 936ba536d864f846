#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace domrt {

/// Identifier recorded in run metadata so results can name their generator.
inline constexpr std::string_view kRngId = "xoshiro256**/splitmix64";

/// One splitmix64 step; advances the state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Per-trial seed derivation: mixes a master seed with a trial index so that
/// trial streams are independent of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ULL);
}

/// xoshiro256** stream seeded from a single 64-bit value via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in the open interval (0,1); never exactly 0 or 1.
    double next_open_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi_exclusive) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi_exclusive - lo)));
    }

    /// Geometric on {1,2,...} by inverse transform: ceil(ln U / ln(1-p)).
    std::int64_t geometric(double p) {
        if (!(p > 0.0) || p > 1.0) throw std::domain_error("geometric: p must be in (0,1]");
        if (p == 1.0) return 1;
        const double u = next_open_unit();
        const double v = std::ceil(std::log(u) / std::log1p(-p));
        if (!(v >= 1.0)) return 1;
        constexpr double kMax = 9.0e18;
        return v > kMax ? static_cast<std::int64_t>(kMax) : static_cast<std::int64_t>(v);
    }

    /// Binomial(n,p) by CDF inversion; O(np) expected, intended for small n.
    std::int64_t binomial(std::int64_t n, double p) {
        if (n < 0 || p < 0.0 || p > 1.0) throw std::domain_error("binomial: bad parameters");
        if (n == 0 || p == 0.0) return 0;
        if (p == 1.0) return n;
        if (p > 0.5) return n - binomial(n, 1.0 - p);
        double u = next_unit();
        double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
        const double odds = p / (1.0 - p);
        std::int64_t k = 0;
        while (u >= pmf && k < n) {
            u -= pmf;
            pmf *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
            ++k;
        }
        return k;
    }

    /// Poisson with lambda = 1 by inversion with cumulative products.
    std::int64_t poisson1() {
        double u = next_unit();
        double pmf = std::exp(-1.0);
        std::int64_t k = 0;
        while (u >= pmf && k < 64) {
            u -= pmf;
            ++k;
            pmf /= static_cast<double>(k);
        }
        return k;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace domrt
