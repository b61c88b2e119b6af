#include "hamqaoa/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "hamqaoa/parallel.hpp"

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_norm(const Statevector& psi) {
    if (std::abs(norm(psi) - 1.0) > 1e-12)
        throw std::logic_error("statevector norm drifted beyond 1e-12");
}

const SimplifiedAnsatz* as_simplified(const AnsatzSpec& a) {
    return std::get_if<SimplifiedAnsatz>(&a);
}

}  // namespace

void validate_ansatz(const InteractionGraph& g, const AnsatzSpec& ansatz) {
    if (const auto* simp = as_simplified(ansatz)) {
        validate_signs(g, simp->signs);
    } else {
        const auto& gen = std::get<GeneralAnsatz>(ansatz);
        if (static_cast<int>(gen.axes.size()) != g.n ||
            static_cast<int>(gen.states.size()) != g.n)
            throw std::invalid_argument("ansatz vectors must match vertex count");
        for (const auto* vecs : {&gen.axes, &gen.states})
            for (const auto& v : *vecs) {
                const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
                if (std::abs(len - 1.0) > 1e-9)
                    throw std::invalid_argument("ansatz vectors must be unit length");
            }
    }
}

CircuitContext::CircuitContext(const InteractionGraph& g) : graph(g), zz_table(zz_phase_table(g)) {}

Statevector initial_state(const InteractionGraph& g, const AnsatzSpec& ansatz) {
    validate_ansatz(g, ansatz);
    if (const auto* simp = as_simplified(ansatz)) return product_x_state(simp->signs);
    return product_bloch_state(std::get<GeneralAnsatz>(ansatz).states);
}

Statevector prepare_hqs(const CircuitContext& ctx, const AnsatzSpec& ansatz,
                        const ParamSchedule& params) {
    params.validate();
    Statevector psi = initial_state(ctx.graph, ansatz);
    const auto* simp = as_simplified(ansatz);
    for (int j = 0; j < params.p(); ++j) {
        apply_zz_phase(psi, ctx.zz_table, params.alpha[j]);
        apply_sum_x(psi, params.beta[j]);
        apply_sum_z(psi, params.gamma[j]);
        if (simp)
            apply_sum_sx(psi, simp->signs, params.delta[j]);
        else
            apply_sum_axis(psi, std::get<GeneralAnsatz>(ansatz).axes, params.delta[j]);
    }
    check_norm(psi);
    return psi;
}

Statevector prepare_hqs(const InteractionGraph& g, const AnsatzSpec& ansatz,
                        const ParamSchedule& params) {
    return prepare_hqs(CircuitContext(g), ansatz, params);
}

namespace {

enum class Driver { A, B, C, D };

// G |psi> for the four driver generators.
Statevector generator_apply(const CircuitContext& ctx, const AnsatzSpec& ansatz, Driver which,
                            const Statevector& psi) {
    Statevector out;
    out.n = psi.n;
    out.amp.assign(psi.dim(), cplx{});
    const cplx* a = psi.amp.data();
    cplx* o = out.amp.data();
    const int n = psi.n;
    switch (which) {
        case Driver::A: {
            const double* t = ctx.zz_table.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
            for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) o[i] = t[i] * a[i];
            break;
        }
        case Driver::B: {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
            for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) {
                cplx acc{};
                for (int q = 0; q < n; ++q) acc += a[i ^ (1LL << q)];
                o[i] = acc;
            }
            break;
        }
        case Driver::C: {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
            for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i)
                o[i] = static_cast<double>(n - 2 * __builtin_popcountll(i)) * a[i];
            break;
        }
        case Driver::D: {
            if (const auto* simp = as_simplified(ansatz)) {
                const auto& s = simp->signs;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
                for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) {
                    cplx acc{};
                    for (int q = 0; q < n; ++q) acc += static_cast<double>(s[q]) * a[i ^ (1LL << q)];
                    o[i] = acc;
                }
            } else {
                const auto& axes = std::get<GeneralAnsatz>(ansatz).axes;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
                for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) {
                    cplx acc{};
                    for (int q = 0; q < n; ++q) {
                        const auto& v = axes[q];
                        const std::uint64_t b = 1ULL << q;
                        if (i & b)
                            acc += cplx(v[0], v[1]) * a[i & ~b] - v[2] * a[i];
                        else
                            acc += v[2] * a[i] + cplx(v[0], -v[1]) * a[i | b];
                    }
                    o[i] = acc;
                }
            }
            break;
        }
    }
    return out;
}

void apply_driver(const CircuitContext& ctx, const AnsatzSpec& ansatz, Driver which,
                  Statevector& psi, double angle) {
    switch (which) {
        case Driver::A:
            apply_zz_phase(psi, ctx.zz_table, angle);
            break;
        case Driver::B:
            apply_sum_x(psi, angle);
            break;
        case Driver::C:
            apply_sum_z(psi, angle);
            break;
        case Driver::D:
            if (const auto* simp = as_simplified(ansatz))
                apply_sum_sx(psi, simp->signs, angle);
            else
                apply_sum_axis(psi, std::get<GeneralAnsatz>(ansatz).axes, angle);
            break;
    }
}

}  // namespace

std::vector<double> energy_gradient(const CircuitContext& ctx, const AnsatzSpec& ansatz,
                                    const ParamSchedule& params, const HamiltonianSpec& spec) {
    params.validate();
    const int p = params.p();
    Statevector psi = prepare_hqs(ctx, ansatz, params);
    Statevector lam = apply(spec, psi);
    std::vector<double> grad(4 * p, 0.0);
    // Undo gates from the end; for each gate exp(-i t G) the derivative of
    // <psi|H|psi> is 2 Im <lambda|G|psi> evaluated with the gate still applied.
    for (int j = p - 1; j >= 0; --j) {
        const Driver order[4] = {Driver::D, Driver::C, Driver::B, Driver::A};
        const double angles[4] = {params.delta[j], params.gamma[j], params.beta[j],
                                  params.alpha[j]};
        const int slot[4] = {3 * p + j, 2 * p + j, p + j, j};
        for (int k = 0; k < 4; ++k) {
            const Statevector gpsi = generator_apply(ctx, ansatz, order[k], psi);
            grad[slot[k]] = 2.0 * inner(lam, gpsi).imag();
            apply_driver(ctx, ansatz, order[k], psi, -angles[k]);
            apply_driver(ctx, ansatz, order[k], lam, -angles[k]);
        }
    }
    return grad;
}

Statevector agm_state(const InteractionGraph& g, const SignString& signs, double theta) {
    ParamSchedule params = ParamSchedule::zeros(1);
    params.alpha[0] = theta;
    params.delta[0] = kPi / 8.0;
    return prepare_hqs(g, SimplifiedAnsatz{signs}, params);
}

AgmResult agm_optimize(const InteractionGraph& g, const SignString& signs, double grid_step) {
    if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");
    const HamiltonianSpec qmc = HamiltonianSpec::preset(SpecKind::qmc, g);
    const CircuitContext ctx(g);
    const auto value = [&](double theta) {
        ParamSchedule params = ParamSchedule::zeros(1);
        params.alpha[0] = theta;
        params.delta[0] = kPi / 8.0;
        return energy(qmc, prepare_hqs(ctx, SimplifiedAnsatz{signs}, params));
    };
    double best_theta = 0.0, best_energy = -1e300;
    const long long steps = static_cast<long long>(std::ceil(kPi / grid_step));
    for (long long k = 0; k <= steps; ++k) {
        const double theta = -kPi / 2.0 + k * grid_step;
        const double e = value(std::min(theta, kPi / 2.0));
        if (e > best_energy) {
            best_energy = e;
            best_theta = theta;
        }
    }
    // Golden-section refinement inside the winning grid cell.
    double lo = best_theta - grid_step, hi = best_theta + grid_step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = value(c), fd = value(d);
    for (int it = 0; it < 80; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = value(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = value(d);
        }
    }
    const double theta = 0.5 * (lo + hi);
    return {theta, value(theta)};
}

}  // namespace hamqaoa
