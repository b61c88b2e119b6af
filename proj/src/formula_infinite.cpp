#include "hamqaoa/formula_infinite.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidueTol = 1e-9;

double spin(std::uint32_t z, int s) { return (z >> s) & 1u ? -1.0 : 1.0; }

// M_jk = G_jk atilde_j atilde_k, the coupling of the quadratic form z^T M z
std::vector<cplx> coupling(const GMatrix& g, const std::vector<double>& prof) {
    std::vector<cplx> m(g.entries.size());
    for (int j = 0; j < g.dim; ++j)
        for (int k = 0; k < g.dim; ++k)
            m[static_cast<std::size_t>(j) * g.dim + k] = g.at(j, k) * prof[j] * prof[k];
    return m;
}

cplx quad_form(const std::vector<cplx>& m, int dim, std::uint32_t z) {
    cplx q{};
    for (int j = 0; j < dim; ++j) {
        const double zj = spin(z, j);
        q += m[static_cast<std::size_t>(j) * dim + j];
        for (int k = j + 1; k < dim; ++k)
            q += 2.0 * m[static_cast<std::size_t>(j) * dim + k] * (zj * spin(z, k));
    }
    return q;
}

// Visits every path once in Gray-code order with its quadratic form value;
// incremental updates cost O(dim) per step, resynced periodically to stop
// rounding drift.  Memory stays O(dim^2): nothing per-path is stored.
template <typename F>
void walk_quadratic(const std::vector<cplx>& m, int dim, F&& visit) {
    const std::uint32_t count = std::uint32_t{1} << dim;
    std::uint32_t z = 0;
    cplx q = quad_form(m, dim, z);
    for (std::uint32_t i = 0;; ++i) {
        visit(z, q);
        if (i + 1 == count) break;
        const int s = std::countr_zero(i + 1);
        if (((i + 1) & 0xFFFu) == 0) {
            z ^= std::uint32_t{1} << s;
            q = quad_form(m, dim, z);
        } else {
            cplx row{};
            for (int k = 0; k < dim; ++k)
                if (k != s) row += m[static_cast<std::size_t>(s) * dim + k] * spin(z, k);
            q -= 4.0 * spin(z, s) * row;
            z ^= std::uint32_t{1} << s;
        }
    }
}

double real_with_residue_check(cplx v, const char* what) {
    if (std::abs(v.imag()) > kResidueTol)
        throw std::logic_error(std::string(what) + " has imaginary residue " +
                               std::to_string(v.imag()));
    return v.real();
}

void check_depth_limit(int p, int depth_limit) {
    if (depth_limit > kInfiniteDepthLimit) depth_limit = kInfiniteDepthLimit;
    if (p > depth_limit)
        throw std::invalid_argument("depth " + std::to_string(p) +
                                    " exceeds the rescaled-limit guard " +
                                    std::to_string(depth_limit));
}

}  // namespace

void RescaledParams::validate() const {
    const std::size_t n = alpha_tilde.size();
    if (n < 1) throw std::invalid_argument("rescaled schedule needs p >= 1");
    if (beta.size() != n || delta.size() != n)
        throw std::invalid_argument("rescaled schedule rows must have equal length");
    for (const auto* arr : {&alpha_tilde, &beta, &delta})
        for (double v : *arr)
            if (!std::isfinite(v)) throw std::invalid_argument("angles must be finite");
    for (double b : beta)
        if (std::abs(b - std::round(b / (kPi / 4)) * (kPi / 4)) > 1e-12)
            throw std::invalid_argument("beta must be a multiple of pi/4 in the rescaled limit");
}

ParamSchedule RescaledParams::to_schedule(double alpha_scale) const {
    ParamSchedule s;
    s.alpha.reserve(alpha_tilde.size());
    for (double a : alpha_tilde) s.alpha.push_back(a * alpha_scale);
    s.beta = beta;
    s.gamma.assign(alpha_tilde.size(), 0.0);
    s.delta = delta;
    return s;
}

void validate_infinite_inputs(const RescaledParams& params, const AnsatzDistribution& dist) {
    params.validate();
    dist.validate();
    if (!dist.x_axis_only())
        throw std::invalid_argument(
            "the rescaled limit requires the ansatz distribution to be supported on {+x, -x}");
}

std::vector<GMatrix> g_sequence(const RescaledParams& params, int depth_limit) {
    params.validate();
    const int p = params.p();
    check_depth_limit(p, depth_limit);
    const int dim = 2 * p + 2;
    const FBarEvaluator eval(params.to_schedule(), AnsatzDistribution::signed_x());
    const auto prof = phase_profile(params.alpha_tilde);

    std::vector<GMatrix> gs;
    gs.reserve(p);
    const std::vector<cplx> zero_coupling(static_cast<std::size_t>(dim) * dim);
    for (int m = 0; m < p; ++m) {
        const auto& cpl = (m == 0) ? zero_coupling : coupling(gs.back(), prof);
        GMatrix g{m, dim, std::vector<cplx>(static_cast<std::size_t>(dim) * dim)};
        walk_quadratic(cpl, dim, [&](std::uint32_t z, cplx q) {
            const cplx w = eval(z)[0] * std::exp(-0.5 * q);
            for (int j = 0; j < dim; ++j) {
                const cplx wj = w * spin(z, j);
                for (int k = j; k < dim; ++k)
                    g.entries[static_cast<std::size_t>(j) * dim + k] += wj * spin(z, k);
            }
        });
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < j; ++k)
                g.entries[static_cast<std::size_t>(j) * dim + k] = g.at(k, j);
        gs.push_back(std::move(g));
    }
    return gs;
}

std::vector<cplx> k_vector(const RescaledParams& params, Pauli sigma, int depth_limit) {
    params.validate();
    const int p = params.p();
    check_depth_limit(p, depth_limit);
    const int dim = 2 * p + 2;
    const FBarEvaluator eval(params.to_schedule(), AnsatzDistribution::signed_x());
    const auto prof = phase_profile(params.alpha_tilde);
    const auto gs = g_sequence(params, depth_limit);
    const auto cpl = coupling(gs.back(), prof);

    std::vector<cplx> kv(dim);
    const int si = static_cast<int>(sigma);
    walk_quadratic(cpl, dim, [&](std::uint32_t z, cplx q) {
        const cplx w = eval(z)[si] * std::exp(-0.5 * q);
        for (int j = 0; j < dim; ++j) kv[j] += w * spin(z, j);
    });
    return kv;
}

double nu(const RescaledParams& params, Pauli left, Pauli right) {
    params.validate();
    if (left == Pauli::I || right == Pauli::I)
        throw std::invalid_argument("nu is defined for Pauli pairs from {X, Y, Z}");
    if (left == Pauli::X || right == Pauli::X) return 0.0;
    const auto kl = k_vector(params, left);
    const auto kr = (right == left) ? kl : k_vector(params, right);
    const auto prof = phase_profile(params.alpha_tilde);
    cplx acc{};
    for (std::size_t j = 0; j < kl.size(); ++j) acc += prof[j] * kl[j] * kr[j];
    return real_with_residue_check(cplx{0.0, -0.5} * acc, "nu");
}

double heisenberg_objective(const RescaledParams& params) {
    params.validate();
    const int p = params.p();
    check_depth_limit(p, kInfiniteDepthLimit);
    const int dim = 2 * p + 2;
    const FBarEvaluator eval(params.to_schedule(), AnsatzDistribution::signed_x());
    const auto prof = phase_profile(params.alpha_tilde);
    const auto gs = g_sequence(params);
    const auto cpl = coupling(gs.back(), prof);

    std::vector<cplx> ky(dim), kz(dim);
    walk_quadratic(cpl, dim, [&](std::uint32_t z, cplx q) {
        const auto f = eval(z);
        const cplx w = std::exp(-0.5 * q);
        const cplx wy = f[2] * w, wz = f[3] * w;
        for (int j = 0; j < dim; ++j) {
            const double zj = spin(z, j);
            ky[j] += wy * zj;
            kz[j] += wz * zj;
        }
    });
    cplx acc{};
    for (int j = 0; j < dim; ++j) acc += prof[j] * (ky[j] * ky[j] + kz[j] * kz[j]);
    return real_with_residue_check(cplx{0.0, -0.5} * acc, "rescaled objective");
}

double assumption_residual_infinite(const RescaledParams& params) {
    params.validate();
    const int p = params.p();
    check_depth_limit(p, kInfiniteDepthLimit);
    const int dim = 2 * p + 2;
    const FBarEvaluator eval(params.to_schedule(), AnsatzDistribution::signed_x());
    const auto prof = phase_profile(params.alpha_tilde);
    const auto gs = g_sequence(params);
    const auto cpl = coupling(gs.back(), prof);

    cplx acc{};
    walk_quadratic(cpl, dim, [&](std::uint32_t z, cplx q) {
        acc += eval(z)[1] * std::exp(-0.5 * q);
    });
    return std::abs(acc);
}

ConsistencyReport consistency_with_finite(const RescaledParams& params, long d) {
    params.validate();
    if (d < 1 || d > kFiniteDegreeLimit)
        throw std::invalid_argument("degree parameter outside 1..1000000");
    const double root = std::sqrt(static_cast<double>(d));
    const auto theta = params.to_schedule(1.0 / root);
    const auto pe = pair_expectations(theta, d, AnsatzDistribution::signed_x());

    ConsistencyReport r;
    r.d = d;
    r.nu_infinite = heisenberg_objective(params);
    r.nu_finite_scaled = -(root / 2.0) * (pe.xx + pe.yy + pe.zz);
    r.relative_deviation =
        std::abs(r.nu_finite_scaled - r.nu_infinite) / std::max(std::abs(r.nu_infinite), 1e-300);
    return r;
}

}  // namespace hamqaoa
