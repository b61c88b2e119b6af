#include "hamqaoa/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "hamqaoa/parallel.hpp"
#include "hamqaoa/rng.hpp"

namespace hamqaoa {

namespace {

std::vector<cplx> dense_matrix(const HamiltonianSpec& spec) {
    const int n = spec.graph.n;
    const std::size_t dim = 1ULL << n;
    std::vector<cplx> mat(dim * dim, cplx{});
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long col = 0; col < static_cast<long long>(dim); ++col) {
        cplx* column = mat.data() + static_cast<std::size_t>(col) * dim;
        double diag = 0.0;
        for (std::size_t e = 0; e < spec.graph.edges.size(); ++e) {
            const auto& edge = spec.graph.edges[e];
            const std::uint64_t mask = (1ULL << edge.u) | (1ULL << edge.v);
            const double par = (((col >> edge.u) ^ (col >> edge.v)) & 1LL) ? -1.0 : 1.0;
            column[col ^ mask] += spec.cxx[e] - par * spec.cyy[e];
            diag += spec.cconst[e] + par * spec.czz[e];
        }
        for (int v = 0; v < n; ++v)
            if (spec.cz[v] != 0.0)
                diag += (((col >> v) & 1LL) ? -1.0 : 1.0) * spec.cz[v];
        column[col] += diag;
    }
    return mat;
}

struct DenseEigen {
    std::vector<double> values;
    std::vector<cplx> vectors;  // column major
};

DenseEigen dense_solve(const HamiltonianSpec& spec) {
    if (spec.graph.n > kDenseQubitLimit)
        throw std::domain_error("dense diagonalization guarded at 14 qubits");
    const lapack_int dim = static_cast<lapack_int>(1ULL << spec.graph.n);
    DenseEigen out;
    out.vectors = dense_matrix(spec);
    out.values.resize(dim);
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', dim,
                                           out.vectors.data(), dim, out.values.data());
    if (info != 0) throw std::runtime_error("zheevd failed");
    return out;
}

Statevector column_state(const DenseEigen& eig, int n, std::size_t col) {
    const std::size_t dim = 1ULL << n;
    Statevector v;
    v.n = n;
    v.amp.assign(eig.vectors.begin() + col * dim, eig.vectors.begin() + (col + 1) * dim);
    return v;
}

void axpy(std::vector<cplx>& y, cplx alpha, const std::vector<cplx>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vec_norm(const std::vector<cplx>& a) {
    double acc = 0.0;
    for (const auto& x : a) acc += std::norm(x);
    return std::sqrt(acc);
}

// Restarted Lanczos with full reorthogonalization. Each sweep builds up to
// `sweep_len` basis vectors from the current start vector, diagonalizes the
// tridiagonal projection and restarts from the extremal Ritz vector.
EigenPair lanczos_extremal(const HamiltonianSpec& spec, Extremum which) {
    if (spec.graph.n > kIterativeQubitLimit)
        throw std::domain_error("iterative eigensolver guarded at 24 qubits");
    const std::size_t dim = 1ULL << spec.graph.n;
    const int sweep_len = static_cast<int>(std::min<std::size_t>(dim, 80));
    const int max_sweeps = 60;

    std::vector<cplx> v0(dim);
    RngStream rng(0x1f2e3d4c5b6a7988ULL, 0);
    for (auto& x : v0) x = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
    {
        const double nn = vec_norm(v0);
        for (auto& x : v0) x /= nn;
    }

    double theta = 0.0;
    Statevector work;
    work.n = spec.graph.n;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::vector<std::vector<cplx>> basis;
        std::vector<double> alpha, beta;
        basis.push_back(v0);
        for (int j = 0; j < sweep_len; ++j) {
            work.amp = basis[j];
            Statevector hw = apply(spec, work);
            std::vector<cplx> w = std::move(hw.amp);
            const double a = dot(basis[j], w).real();
            alpha.push_back(a);
            axpy(w, -a, basis[j]);
            if (j > 0) axpy(w, -beta[j - 1], basis[j - 1]);
            for (const auto& b : basis) axpy(w, -dot(b, w), b);  // full reorthogonalization
            const double nb = vec_norm(w);
            if (nb < 1e-13 || j + 1 == sweep_len) {
                beta.push_back(nb);
                break;
            }
            beta.push_back(nb);
            for (auto& x : w) x /= nb;
            basis.push_back(std::move(w));
        }
        const int m = static_cast<int>(alpha.size());
        std::vector<double> d = alpha;
        std::vector<double> e(static_cast<std::size_t>(std::max(1, m - 1)), 0.0);
        for (int j = 0; j + 1 < m; ++j) e[j] = beta[j];
        std::vector<double> z(static_cast<std::size_t>(m) * m);
        const lapack_int info =
            LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m, d.data(), e.data(), z.data(), m);
        if (info != 0) throw std::runtime_error("dstev failed");
        const int pick = which == Extremum::min ? 0 : m - 1;
        theta = d[pick];
        std::vector<cplx> ritz(dim, cplx{});
        for (int j = 0; j < static_cast<int>(basis.size()); ++j)
            axpy(ritz, z[static_cast<std::size_t>(pick) * m + j], basis[j]);
        const double nn = vec_norm(ritz);
        for (auto& x : ritz) x /= nn;
        // Residual from the trailing beta times the last Ritz coefficient.
        const double resid = (m <= static_cast<int>(basis.size()) && m >= 1)
                                 ? std::abs(beta[m - 1] * z[static_cast<std::size_t>(pick) * m + (m - 1)])
                                 : 0.0;
        v0 = std::move(ritz);
        if (resid < 1e-10 * std::max(1.0, std::abs(theta))) break;
    }
    Statevector vec;
    vec.n = spec.graph.n;
    vec.amp = std::move(v0);
    // Verify the pair before returning it.
    Statevector hv = apply(spec, vec);
    double resid2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) resid2 += std::norm(hv.amp[i] - theta * vec.amp[i]);
    if (std::sqrt(resid2) > 1e-8 * std::max(1.0, std::abs(theta)))
        throw std::runtime_error("Lanczos did not converge");
    return {theta, std::move(vec)};
}

}  // namespace

EigenPair extremal_eigenpair(const HamiltonianSpec& spec, Extremum which, EigenMethod method) {
    if (method == EigenMethod::automatic)
        method = spec.graph.n <= kDenseQubitLimit ? EigenMethod::dense : EigenMethod::iterative;
    if (method == EigenMethod::dense) {
        const DenseEigen eig = dense_solve(spec);
        const std::size_t pick = which == Extremum::min ? 0 : eig.values.size() - 1;
        return {eig.values[pick], column_state(eig, spec.graph.n, pick)};
    }
    return lanczos_extremal(spec, which);
}

EigenSpace extremal_eigenspace(const HamiltonianSpec& spec, Extremum which) {
    const DenseEigen eig = dense_solve(spec);
    const std::size_t dim = eig.values.size();
    const std::size_t pick = which == Extremum::min ? 0 : dim - 1;
    EigenSpace space;
    space.value = eig.values[pick];
    for (std::size_t c = 0; c < dim; ++c)
        if (std::abs(eig.values[c] - space.value) <= kDegeneracyTol)
            space.basis.push_back(column_state(eig, spec.graph.n, c));
    return space;
}

}  // namespace hamqaoa
