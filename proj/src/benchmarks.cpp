#include "domrt/benchmarks.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace domrt {

std::int64_t onemax(const BitString& x) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) count += x.get(i);
    return count;
}

std::int64_t leadingones(const BitString& x) {
    std::int64_t count = 0;
    while (count < static_cast<std::int64_t>(x.size()) &&
           x.get(static_cast<std::size_t>(count)))
        ++count;
    return count;
}

std::int64_t jump(const BitString& x, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (k < 1 || k > n) throw std::domain_error("jump: k must lie in [1..n]");
    const std::int64_t om = onemax(x);
    if (om <= n - k || om == n) return om + k;
    return n - om;
}

std::int64_t inversions(const std::vector<int>& perm) {
    const auto n = perm.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            throw std::domain_error("inversions: input is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

WeightedGraph::WeightedGraph(int n_vertices, std::vector<Edge> edges, int source)
    : n_(n_vertices), source_(source), edges_(std::move(edges)) {
    if (n_ < 2) throw std::domain_error("WeightedGraph: need at least 2 vertices");
    if (source_ < 0 || source_ >= n_) throw std::domain_error("WeightedGraph: bad source");
    weight_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
                   kInfiniteFitness);
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::domain_error("WeightedGraph: edge endpoint out of range");
        if (e.u == e.v) throw std::domain_error("WeightedGraph: self-loop");
        if (e.w < 1) throw std::domain_error("WeightedGraph: weights must be >= 1");
        weight_[static_cast<std::size_t>(e.u) * n_ + e.v] = e.w;
        weight_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.w;
    }
    // Connectivity check by BFS.
    std::vector<bool> reached(static_cast<std::size_t>(n_), false);
    std::queue<int> frontier;
    frontier.push(source_);
    reached[static_cast<std::size_t>(source_)] = true;
    int count = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n_; ++v) {
            if (!reached[static_cast<std::size_t>(v)] &&
                weight_[static_cast<std::size_t>(u) * n_ + v] != kInfiniteFitness) {
                reached[static_cast<std::size_t>(v)] = true;
                ++count;
                frontier.push(v);
            }
        }
    }
    if (count != n_) throw std::domain_error("WeightedGraph: graph is not connected");
}

std::int64_t WeightedGraph::edge_weight(int u, int v) const {
    return weight_[static_cast<std::size_t>(u) * n_ + v];
}

WeightedGraph WeightedGraph::path(int n_vertices) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n_vertices; ++i) edges.push_back({i, i + 1, 1});
    return WeightedGraph(n_vertices, std::move(edges), 0);
}

WeightedGraph WeightedGraph::read(std::istream& is) {
    int n = 0, m = 0, source = 0;
    if (!(is >> n >> m >> source))
        throw std::runtime_error("graph file: expected 'n m source' on line 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        std::int64_t w = 0;
        if (!(is >> u >> v >> w))
            throw std::runtime_error("graph file: expected m lines of 'u v w'");
        edges.push_back({u - 1, v - 1, w});
    }
    return WeightedGraph(n, std::move(edges), source - 1);
}

void WeightedGraph::write(std::ostream& os) const {
    os << n_ << " " << edges_.size() << " " << (source_ + 1) << "\n";
    for (const auto& e : edges_)
        os << (e.u + 1) << " " << (e.v + 1) << " " << e.w << "\n";
}

std::vector<std::int64_t> sssp_fitness(const WeightedGraph& g, const PointerArray& ind) {
    const int n = g.n();
    if (static_cast<int>(ind.size()) != n)
        throw std::domain_error("sssp_fitness: pointer array size mismatch");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> touched;
    for (int v = 0; v < n; ++v) {
        if (v == g.source()) continue;
        std::int64_t length = 0;
        int cur = v;
        touched.clear();
        bool ok = true;
        while (cur != g.source()) {
            if (visited[static_cast<std::size_t>(cur)]) {
                ok = false;  // revisit: the walk cycles
                break;
            }
            visited[static_cast<std::size_t>(cur)] = true;
            touched.push_back(cur);
            const int next = ind[static_cast<std::size_t>(cur)];
            if (next == cur || next < 0 || next >= n) {
                ok = false;
                break;
            }
            const std::int64_t w = g.edge_weight(cur, next);
            if (w == kInfiniteFitness) {
                ok = false;  // pointer does not follow a graph edge
                break;
            }
            length += w;
            cur = next;
        }
        for (int t : touched) visited[static_cast<std::size_t>(t)] = false;
        out.push_back(ok ? length : kInfiniteFitness);
    }
    return out;
}

bool vector_at_least_as_good(const std::vector<std::int64_t>& child,
                             const std::vector<std::int64_t>& parent) {
    if (child.size() != parent.size())
        throw std::domain_error("vector_at_least_as_good: length mismatch");
    for (std::size_t i = 0; i < child.size(); ++i)
        if (child[i] > parent[i]) return false;
    return true;
}

std::vector<std::int64_t> dijkstra_distances(const WeightedGraph& g) {
    const int n = g.n();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n), kInfiniteFitness);
    dist[static_cast<std::size_t>(g.source())] = 0;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, g.source()});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        for (int v = 0; v < n; ++v) {
            const std::int64_t w = g.edge_weight(u, v);
            if (w == kInfiniteFitness) continue;
            if (d + w < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = d + w;
                heap.push({d + w, v});
            }
        }
    }
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 0; v < n; ++v)
        if (v != g.source()) out.push_back(dist[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace domrt
