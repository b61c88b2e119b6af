#include "hamqaoa/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "hamqaoa/parallel.hpp"

namespace hamqaoa {

HamiltonianSpec HamiltonianSpec::preset(SpecKind kind, const InteractionGraph& g,
                                        double delta, double h) {
    HamiltonianSpec spec;
    spec.kind = kind;
    spec.graph = g;
    const std::size_t ne = g.edges.size();
    spec.cconst.assign(ne, 0.0);
    spec.cxx.assign(ne, 0.0);
    spec.cyy.assign(ne, 0.0);
    spec.czz.assign(ne, 0.0);
    spec.cz.assign(g.n, 0.0);
    for (std::size_t e = 0; e < ne; ++e) {
        const double w = g.edges[e].w;
        switch (kind) {
            case SpecKind::qmc:
                // Projector form: each edge contributes w/2 (1 - XX - YY - ZZ).
                spec.cconst[e] = 0.5 * w;
                spec.cxx[e] = spec.cyy[e] = spec.czz[e] = -0.5 * w;
                break;
            case SpecKind::heisenberg_pauli:
                spec.cxx[e] = spec.cyy[e] = spec.czz[e] = w;
                break;
            case SpecKind::xy:
                spec.cxx[e] = spec.cyy[e] = w;
                break;
            case SpecKind::xxz:
                spec.cxx[e] = spec.cyy[e] = w;
                spec.czz[e] = delta * w;
                break;
            case SpecKind::custom:
                throw std::invalid_argument("custom spec needs explicit coefficients");
        }
    }
    if (kind == SpecKind::xxz) {
        spec.delta = delta;
        spec.h = h;
        for (int v = 0; v < g.n; ++v) spec.cz[v] = h;
    }
    return spec;
}

HamiltonianSpec HamiltonianSpec::custom(const InteractionGraph& g, std::vector<double> cconst,
                                        std::vector<double> cxx, std::vector<double> cyy,
                                        std::vector<double> czz, std::vector<double> cz) {
    const std::size_t ne = g.edges.size();
    if (cconst.size() != ne || cxx.size() != ne || cyy.size() != ne || czz.size() != ne)
        throw std::invalid_argument("edge coefficient arrays must match edge count");
    if (cz.size() != static_cast<std::size_t>(g.n))
        throw std::invalid_argument("vertex coefficient array must match vertex count");
    HamiltonianSpec spec;
    spec.kind = SpecKind::custom;
    spec.graph = g;
    spec.cconst = std::move(cconst);
    spec.cxx = std::move(cxx);
    spec.cyy = std::move(cyy);
    spec.czz = std::move(czz);
    spec.cz = std::move(cz);
    return spec;
}

SpecKind spec_kind_from_string(const std::string& name) {
    if (name == "qmc") return SpecKind::qmc;
    if (name == "heisenberg_pauli") return SpecKind::heisenberg_pauli;
    if (name == "xy") return SpecKind::xy;
    if (name == "xxz") return SpecKind::xxz;
    if (name == "custom") return SpecKind::custom;
    throw std::invalid_argument("unknown Hamiltonian kind: " + name);
}

std::string to_string(SpecKind kind) {
    switch (kind) {
        case SpecKind::qmc: return "qmc";
        case SpecKind::heisenberg_pauli: return "heisenberg_pauli";
        case SpecKind::xy: return "xy";
        case SpecKind::xxz: return "xxz";
        case SpecKind::custom: return "custom";
    }
    return "?";
}

double energy(const HamiltonianSpec& spec, const Statevector& psi) {
    if (spec.graph.n != psi.n) throw std::invalid_argument("spec/state size mismatch");
    double total = 0.0;
    for (std::size_t e = 0; e < spec.graph.edges.size(); ++e) {
        const auto& edge = spec.graph.edges[e];
        const PauliPair pp = expect_pair(psi, edge.u, edge.v);
        total += spec.cconst[e] + spec.cxx[e] * pp.xx + spec.cyy[e] * pp.yy + spec.czz[e] * pp.zz;
    }
    for (int v = 0; v < spec.graph.n; ++v)
        if (spec.cz[v] != 0.0) total += spec.cz[v] * expect_z(psi, v);
    return total;
}

double energy_density(const HamiltonianSpec& spec, const Statevector& psi) {
    return energy(spec, psi) / spec.graph.n;
}

Statevector apply(const HamiltonianSpec& spec, const Statevector& psi) {
    if (spec.graph.n != psi.n) throw std::invalid_argument("spec/state size mismatch");
    Statevector out;
    out.n = psi.n;
    out.amp.assign(psi.dim(), cplx{});
    const cplx* a = psi.amp.data();
    cplx* o = out.amp.data();
    const auto& edges = spec.graph.edges;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) {
        cplx acc{};
        double diag = 0.0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const int u = edges[e].u, v = edges[e].v;
            const std::uint64_t mask = (1ULL << u) | (1ULL << v);
            const double par = (((i >> u) ^ (i >> v)) & 1LL) ? -1.0 : 1.0;
            // <i|H|j> rows: XX and YY couple i to i^mask, ZZ and the constant
            // stay on the diagonal.
            acc += (spec.cxx[e] - par * spec.cyy[e]) * a[i ^ mask];
            diag += spec.cconst[e] + par * spec.czz[e];
        }
        for (int v = 0; v < spec.graph.n; ++v)
            if (spec.cz[v] != 0.0)
                diag += (((i >> v) & 1LL) ? -1.0 : 1.0) * spec.cz[v];
        o[i] = acc + diag * a[i];
    }
    return out;
}

}  // namespace hamqaoa
