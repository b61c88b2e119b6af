#pragma once

#include <variant>
#include <vector>

#include "hamqaoa/graph.hpp"
#include "hamqaoa/hamiltonian.hpp"
#include "hamqaoa/schedule.hpp"
#include "hamqaoa/statevector.hpp"

namespace hamqaoa {

struct SimplifiedAnsatz {
    SignString signs;  // drive axis s_v x, initial state |s_v x>
};

struct GeneralAnsatz {
    std::vector<Vec3> axes;    // n_v, unit
    std::vector<Vec3> states;  // m_v, unit Bloch vectors
};

using AnsatzSpec = std::variant<SimplifiedAnsatz, GeneralAnsatz>;

void validate_ansatz(const InteractionGraph& g, const AnsatzSpec& ansatz);

// Cached per-graph data reused across repeated circuit evaluations.
struct CircuitContext {
    InteractionGraph graph;
    std::vector<double> zz_table;

    explicit CircuitContext(const InteractionGraph& g);
};

Statevector initial_state(const InteractionGraph& g, const AnsatzSpec& ansatz);
Statevector prepare_hqs(const InteractionGraph& g, const AnsatzSpec& ansatz,
                        const ParamSchedule& params);
Statevector prepare_hqs(const CircuitContext& ctx, const AnsatzSpec& ansatz,
                        const ParamSchedule& params);

// d energy / d theta for all 4p schedule entries (order alpha|beta|gamma|delta)
// by reverse sweep over the circuit; matches finite differences of
// energy(spec, prepare_hqs(...)).
std::vector<double> energy_gradient(const CircuitContext& ctx, const AnsatzSpec& ansatz,
                                    const ParamSchedule& params, const HamiltonianSpec& spec);

// Product-basis rotation ansatz: the depth-1 schedule (theta, 0, 0, pi/8).
Statevector agm_state(const InteractionGraph& g, const SignString& signs, double theta);

struct AgmResult {
    double theta = 0.0;
    double energy = 0.0;  // QMC energy, maximized
};

// Dense grid over theta in (-pi/2, pi/2] with local refinement.
AgmResult agm_optimize(const InteractionGraph& g, const SignString& signs,
                       double grid_step = 1e-3);

}  // namespace hamqaoa
