#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

namespace domrt {

/// Fixed-length bit string over {0,1}; the search space of Section-2 problems.
class BitString {
public:
    explicit BitString(std::size_t n, bool ones = false)
        : bits_(n, ones ? 1 : 0) {
        if (n < 1) throw std::domain_error("BitString: n must be >= 1");
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool get(std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    bool operator==(const BitString&) const = default;

    const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Number of one-bits.
std::int64_t onemax(const BitString& x);

/// Length of the maximal all-ones prefix.
std::int64_t leadingones(const BitString& x);

/// OneMax(x)+k on [0..n-k] and at n; n-OneMax(x) inside the gap.
std::int64_t jump(const BitString& x, std::int64_t k);

/// Number of pairs i<j with perm[i] > perm[j]; perm must contain 1..n.
std::int64_t inversions(const std::vector<int>& perm);

inline constexpr std::int64_t kInfiniteFitness = std::numeric_limits<std::int64_t>::max();

/// Connected undirected graph with positive integer weights and a source.
struct WeightedGraph {
    struct Edge {
        int u;
        int v;
        std::int64_t w;
    };

    WeightedGraph(int n_vertices, std::vector<Edge> edges, int source);

    int n() const noexcept { return n_; }
    int source() const noexcept { return source_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Weight of edge {u,v} or kInfiniteFitness when absent.
    std::int64_t edge_weight(int u, int v) const;

    /// Path graph s=0 - 1 - ... - (n-1) with unit weights.
    static WeightedGraph path(int n_vertices);

    /// Plain text: line 1 "n m source", then m lines "u v w" (1-based ids).
    static WeightedGraph read(std::istream& is);
    void write(std::ostream& os) const;

private:
    int n_;
    int source_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> weight_;  // dense n*n lookup
};

/// For every vertex except the source, a pointer to some other vertex.
/// Adjacency is not required; fitness handles non-edges.
using PointerArray = std::vector<int>;

/// Pointer-walk lengths to the source, one entry per non-source vertex in
/// increasing vertex order; cycles and non-edges yield kInfiniteFitness.
std::vector<std::int64_t> sssp_fitness(const WeightedGraph& g, const PointerArray& ind);

/// Componentwise "child <= parent" under minimization, infinities comparable.
bool vector_at_least_as_good(const std::vector<std::int64_t>& child,
                             const std::vector<std::int64_t>& parent);

/// Shortest-path distances from the source (deterministic oracle), same
/// vertex ordering as sssp_fitness.
std::vector<std::int64_t> dijkstra_distances(const WeightedGraph& g);

}  // namespace domrt
