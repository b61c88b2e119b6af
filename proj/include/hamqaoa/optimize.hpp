#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/graph.hpp"
#include "hamqaoa/hamiltonian.hpp"
#include "hamqaoa/pointset.hpp"
#include "hamqaoa/schedule.hpp"
#include "hamqaoa/simulator.hpp"

namespace hamqaoa {

// Wraps into (-period/2, period/2]; all circuit angles are pi-periodic.
double wrap_angle(double x, double period);

// Minimization target over a depth-p schedule.  Flat coordinate order is
// [alpha|beta|gamma|delta].  Empty periods means every coordinate wraps mod
// pi; a disengaged entry leaves that coordinate unbounded.  Frozen coordinates
// keep their initialization value.  anchor supplies values for frozen
// coordinates when a strategy draws random starting points.
struct Objective {
    int p = 0;
    std::function<double(const ParamSchedule&)> value;
    std::function<std::vector<double>(const ParamSchedule&)> gradient;  // optional
    std::vector<std::optional<double>> periods;
    std::vector<bool> frozen;
    ParamSchedule anchor;
    std::string metadata;
};

enum class LocalMethod { nelder_mead, lbfgs };

struct LocalConfig {
    LocalMethod method = LocalMethod::nelder_mead;
    long max_evals = 40000;
    double simplex_tol = 1e-8;  // downhill simplex: diameter convergence
    double grad_tol = 1e-8;     // lbfgs: gradient infinity-norm convergence
    double initial_step = 0.2;
};

struct LocalResult {
    ParamSchedule params;
    double value = 0.0;
    long evals = 0;
    bool converged = false;
};

// Never returns a value above value(init).
LocalResult minimize_local(const Objective& obj, const ParamSchedule& init,
                           const LocalConfig& config = {});

// --- objective builders ---

// <spec> of the circuit state on g; negate for maximization problems.
Objective graph_energy_objective(const InteractionGraph& g, const HamiltonianSpec& spec,
                                 const AnsatzSpec& ansatz, int p, bool negate = false);

// Per-edge observable under the averaged finite-degree iteration.
Objective formula_energy_objective(const EdgeObservable& obs, int p, long d,
                                   const AnsatzDistribution& dist, bool negate = false);

// Maximizes the rescaled limit objective at a fixed beta pattern (multiples of
// pi/4); alpha coordinates carry alpha_tilde and are unbounded, beta and gamma
// are frozen.
Objective infinite_limit_objective(const std::vector<double>& beta_pattern, int p);

// --- strategies ---

struct DepthRecord {
    int p = 0;
    ParamSchedule params;
    double value = 0.0;
    long evals = 0;
};

struct StrategyReport {
    std::string strategy;
    std::uint64_t seed = 0;
    long total_evals = 0;
    double wall_seconds = 0.0;
    std::vector<DepthRecord> levels;          // one per depth for gi; one for random
    std::vector<DepthRecord> formula_levels;  // ifp only: the formula stage trace

    const DepthRecord& best() const;  // lowest value; earliest level on ties
};

StrategyReport strategy_random(const Objective& obj, int restarts, std::uint64_t seed,
                               const LocalConfig& config = {});

using ObjectiveFactory = std::function<Objective(int p)>;

enum class InsertPolicy { end, all_positions };

StrategyReport strategy_gi(const ObjectiveFactory& factory, int p_max, int samples_level1,
                           std::uint64_t seed, const LocalConfig& config = {},
                           InsertPolicy policy = InsertPolicy::end);

// Optimizes the averaged-edge iteration at d = round(average degree) - 1 with
// the gi strategy, then polishes on the true graph objective from that start.
StrategyReport strategy_ifp(const InteractionGraph& g, const HamiltonianSpec& spec,
                            const AnsatzSpec& ansatz, int p, const AnsatzDistribution& dist,
                            std::uint64_t seed, const LocalConfig& config = {},
                            int formula_restarts = 20, bool negate = true);

// --- canonicalization ---

// Collapses parameter degeneracies: global negation when alpha_1 < 0, then a
// layer-by-layer cascade that moves beta, gamma, delta of layers 1..p-1 into
// [0, pi/2] by pushing Pauli-product factors into the following layer.  d is
// one less than the graph degree; parity decides which alpha moves are free.
ParamSchedule gauge_fix(const ParamSchedule& theta, long d);

}  // namespace hamqaoa
