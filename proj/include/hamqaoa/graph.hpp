#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hamqaoa {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Undirected simple graph with real edge weights. Construction validates the
// edge list: endpoints in range, no self loops, no duplicate edges (in either
// orientation), finite weights.
struct InteractionGraph {
    int n = 0;
    std::vector<Edge> edges;

    static InteractionGraph make(int n, std::vector<Edge> edges);

    int degree(int v) const;
    double average_degree() const;
    bool is_regular() const;
    double total_weight() const;
    std::vector<std::vector<int>> adjacency() const;
};

InteractionGraph ring_graph(int n);           // n >= 3
InteractionGraph path_graph(int n);           // n >= 1
InteractionGraph complete_graph(int n);       // n >= 1
InteractionGraph heawood_graph();             // 14 vertices, 3-regular, girth 6
InteractionGraph random_regular_graph(int n, int degree, std::uint64_t seed);
InteractionGraph erdos_renyi_graph(int n, double prob, std::uint64_t seed);

// Shortest cycle length; std::nullopt when the graph is acyclic.
std::optional<int> girth(const InteractionGraph& g);

bool is_bipartite(const InteractionGraph& g);
bool is_connected(const InteractionGraph& g);

// +/-1 per vertex.
using SignString = std::vector<int>;

void validate_signs(const InteractionGraph& g, const SignString& s);

double cut_value(const InteractionGraph& g, const SignString& s);

struct CutResult {
    double value = 0.0;
    SignString signs;
};

// Exact maximum cut by enumerating the 2^(n-1) sign strings with s[0] = +1.
// Ties resolve to the lexicographically smallest string (+1 sorts before -1).
// Guarded at n <= 26.
CutResult max_cut_exact(const InteractionGraph& g);

// Single-flip hill climbing from random starts; deterministic in (seed,
// restarts), best value wins with lowest restart index breaking ties.
CutResult max_cut_local_search(const InteractionGraph& g, int restarts, std::uint64_t seed);

enum class SignPolicy { exact, local_search, random };

SignString choose_signs(const InteractionGraph& g, SignPolicy policy, std::uint64_t seed = 0);

}  // namespace hamqaoa
