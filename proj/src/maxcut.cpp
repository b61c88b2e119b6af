#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hamqaoa/graph.hpp"
#include "hamqaoa/parallel.hpp"
#include "hamqaoa/rng.hpp"

namespace hamqaoa {

namespace {

SignString signs_from_mask(int n, std::uint64_t mask) {
    // Vertex 0 is pinned to +1; bit i-1 set means vertex i carries -1.
    SignString s(n, 1);
    for (int i = 1; i < n; ++i)
        if ((mask >> (i - 1)) & 1ULL) s[i] = -1;
    return s;
}

bool lex_less(const SignString& a, const SignString& b) {
    // +1 sorts before -1.
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace

CutResult max_cut_exact(const InteractionGraph& g) {
    if (g.n > 26) throw std::domain_error("exact max cut guarded at n <= 26");
    const std::uint64_t total = 1ULL << (g.n - 1);
    const std::size_t nchunks = (total + kReductionChunk - 1) / kReductionChunk;
    std::vector<CutResult> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kReductionChunk;
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + kReductionChunk);
        CutResult best{-1.0, {}};
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            SignString s = signs_from_mask(g.n, mask);
            const double cut = cut_value(g, s);
            if (cut > best.value + 1e-12 ||
                (cut > best.value - 1e-12 && (best.signs.empty() || lex_less(s, best.signs)))) {
                best = {cut, std::move(s)};
            }
        }
        partial[static_cast<std::size_t>(c)] = std::move(best);
    }
    CutResult best = std::move(partial[0]);
    for (std::size_t c = 1; c < nchunks; ++c) {
        const CutResult& cand = partial[c];
        if (cand.value > best.value + 1e-12 ||
            (cand.value > best.value - 1e-12 && lex_less(cand.signs, best.signs)))
            best = std::move(partial[c]);
    }
    return best;
}

CutResult max_cut_local_search(const InteractionGraph& g, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("need at least one restart");
    const auto adj = g.adjacency();
    std::vector<std::vector<double>> wadj(g.n);
    for (int v = 0; v < g.n; ++v) wadj[v].resize(adj[v].size());
    for (const auto& e : g.edges) {
        for (std::size_t k = 0; k < adj[e.u].size(); ++k)
            if (adj[e.u][k] == e.v) wadj[e.u][k] = e.w;
        for (std::size_t k = 0; k < adj[e.v].size(); ++k)
            if (adj[e.v][k] == e.u) wadj[e.v][k] = e.w;
    }
    std::vector<CutResult> results(restarts);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (int r = 0; r < restarts; ++r) {
        RngStream rng(seed, static_cast<std::uint64_t>(r));
        SignString s(g.n);
        for (int v = 0; v < g.n; ++v) s[v] = rng.coin() ? 1 : -1;
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < g.n; ++v) {
                // Gain of flipping v: cut edges become uncut and vice versa.
                double gain = 0.0;
                for (std::size_t k = 0; k < adj[v].size(); ++k)
                    gain += (s[v] == s[adj[v][k]] ? wadj[v][k] : -wadj[v][k]);
                if (gain > 1e-12) {
                    s[v] = -s[v];
                    improved = true;
                }
            }
        }
        results[r] = {cut_value(g, s), std::move(s)};
    }
    int best = 0;
    for (int r = 1; r < restarts; ++r)
        if (results[r].value > results[best].value + 1e-12) best = r;
    return results[best];
}

SignString choose_signs(const InteractionGraph& g, SignPolicy policy, std::uint64_t seed) {
    switch (policy) {
        case SignPolicy::exact:
            return max_cut_exact(g).signs;
        case SignPolicy::local_search:
            return max_cut_local_search(g, 32, seed).signs;
        case SignPolicy::random: {
            RngStream rng(seed, 0);
            SignString s(g.n);
            for (int v = 0; v < g.n; ++v) s[v] = rng.coin() ? 1 : -1;
            return s;
        }
    }
    throw std::invalid_argument("unknown sign policy");
}

}  // namespace hamqaoa
