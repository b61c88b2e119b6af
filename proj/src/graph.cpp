#include "hamqaoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "hamqaoa/rng.hpp"

namespace hamqaoa {

InteractionGraph InteractionGraph::make(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self loops are not allowed");
        if (!std::isfinite(e.w)) throw std::invalid_argument("edge weight must be finite");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
    }
    InteractionGraph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

int InteractionGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.u == v || e.v == v) ++d;
    return d;
}

double InteractionGraph::average_degree() const {
    return n == 0 ? 0.0 : 2.0 * static_cast<double>(edges.size()) / n;
}

bool InteractionGraph::is_regular() const {
    if (n == 0) return true;
    const int d0 = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d0) return false;
    return true;
}

double InteractionGraph::total_weight() const {
    double t = 0.0;
    for (const auto& e : edges) t += e.w;
    return t;
}

std::vector<std::vector<int>> InteractionGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

InteractionGraph ring_graph(int n) {
    if (n < 3) throw std::invalid_argument("ring needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return InteractionGraph::make(n, std::move(edges));
}

InteractionGraph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return InteractionGraph::make(n, std::move(edges));
}

InteractionGraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    if (n > 4096) throw std::invalid_argument("complete graph size guard exceeded");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return InteractionGraph::make(n, std::move(edges));
}

InteractionGraph heawood_graph() {
    // 14-cycle plus the chords of the LCF code [5, -5]^7.
    std::vector<Edge> edges;
    for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14, 1.0});
    for (int i = 0; i < 14; i += 2) edges.push_back({i, (i + 5) % 14, 1.0});
    return InteractionGraph::make(14, std::move(edges));
}

InteractionGraph random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n < 1 || degree < 1) throw std::invalid_argument("bad random regular parameters");
    if (degree >= n) throw std::invalid_argument("degree must be below n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw std::invalid_argument("n * degree must be even");
    RngStream rng(seed, 0);
    // Configuration model with rejection until the pairing is simple.
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * degree);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < degree; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(std::minmax(u, v)).second) {
                ok = false;
                break;
            }
            edges.push_back({u, v, 1.0});
        }
        if (ok) return InteractionGraph::make(n, std::move(edges));
    }
    throw std::runtime_error("random regular pairing did not become simple");
}

InteractionGraph erdos_renyi_graph(int n, double prob, std::uint64_t seed) {
    if (n < 1 || prob < 0.0 || prob > 1.0)
        throw std::invalid_argument("bad Erdos-Renyi parameters");
    RngStream rng(seed, 0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < prob) edges.push_back({u, v, 1.0});
    return InteractionGraph::make(n, std::move(edges));
}

std::optional<int> girth(const InteractionGraph& g) {
    const auto adj = g.adjacency();
    int best = std::numeric_limits<int>::max();
    // BFS from every root; the shortest cycle through the root closes when a
    // non-tree edge joins two vertices already reached.
    for (int root = 0; root < g.n; ++root) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const InteractionGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> color(g.n, -1);
    for (int root = 0; root < g.n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const InteractionGraph& g) {
    if (g.n == 0) return true;
    const auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == g.n;
}

void validate_signs(const InteractionGraph& g, const SignString& s) {
    if (static_cast<int>(s.size()) != g.n)
        throw std::invalid_argument("sign string length must equal vertex count");
    for (int v : s)
        if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
}

double cut_value(const InteractionGraph& g, const SignString& s) {
    validate_signs(g, s);
    double cut = 0.0;
    for (const auto& e : g.edges)
        if (s[e.u] != s[e.v]) cut += e.w;
    return cut;
}

}  // namespace hamqaoa
