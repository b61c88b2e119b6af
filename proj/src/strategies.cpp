#include <chrono>
#include <cmath>
#include <stdexcept>

#include "hamqaoa/optimize.hpp"
#include "hamqaoa/rng.hpp"

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> insert_at(const std::vector<double>& v, int pos, double value) {
    std::vector<double> out;
    out.reserve(v.size() + 1);
    out.insert(out.end(), v.begin(), v.begin() + pos);
    out.push_back(value);
    out.insert(out.end(), v.begin() + pos, v.end());
    return out;
}

// a zero layer is the identity circuit block, so the inserted schedule
// reproduces the original state exactly
ParamSchedule insert_zero_layer(const ParamSchedule& th, int pos) {
    if (pos < 0 || pos > th.p()) throw std::invalid_argument("layer insertion position out of range");
    ParamSchedule out;
    out.alpha = insert_at(th.alpha, pos, 0.0);
    out.beta = insert_at(th.beta, pos, 0.0);
    out.gamma = insert_at(th.gamma, pos, 0.0);
    out.delta = insert_at(th.delta, pos, 0.0);
    return out;
}

std::vector<double> anchor_flat(const Objective& obj) {
    if (static_cast<int>(obj.anchor.alpha.size()) == obj.p) {
        obj.anchor.validate();
        return obj.anchor.flat();
    }
    return std::vector<double>(4 * obj.p, 0.0);
}

EdgeObservable observable_for(const HamiltonianSpec& spec) {
    switch (spec.kind) {
        case SpecKind::qmc:
            return EdgeObservable::qmc();
        case SpecKind::heisenberg_pauli:
            return EdgeObservable::heisenberg();
        case SpecKind::xy:
            return EdgeObservable::xy();
        case SpecKind::xxz:
            return EdgeObservable::xxz(spec.delta);
        case SpecKind::custom:
            break;
    }
    throw std::invalid_argument("no per-edge surrogate for a custom Hamiltonian");
}

}  // namespace

StrategyReport strategy_random(const Objective& obj, int restarts, std::uint64_t seed,
                               const LocalConfig& config) {
    if (restarts < 1) throw std::invalid_argument("restarts must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    const int dims = 4 * obj.p;
    std::vector<bool> frozen =
        obj.frozen.empty() ? std::vector<bool>(dims, false) : obj.frozen;
    if (static_cast<int>(frozen.size()) != dims)
        throw std::invalid_argument("objective frozen mask length must be 4p");
    const std::vector<double> anchor = anchor_flat(obj);

    std::vector<LocalResult> results(restarts);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        RngStream rng(seed, static_cast<std::uint64_t>(r));
        std::vector<double> x(dims);
        for (int c = 0; c < dims; ++c)
            x[c] = frozen[c] ? anchor[c] : rng.uniform(-kPi / 2.0, kPi / 2.0);
        results[r] = minimize_local(obj, ParamSchedule::from_flat(x), config);
    }

    int best = 0;
    long total = results[0].evals;
    for (int r = 1; r < restarts; ++r) {
        total += results[r].evals;
        if (results[r].value < results[best].value) best = r;
    }

    StrategyReport rep;
    rep.strategy = "random";
    rep.seed = seed;
    rep.total_evals = total;
    rep.levels.push_back({obj.p, results[best].params, results[best].value, total});
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

StrategyReport strategy_gi(const ObjectiveFactory& factory, int p_max, int samples_level1,
                           std::uint64_t seed, const LocalConfig& config, InsertPolicy policy) {
    if (p_max < 1) throw std::invalid_argument("p_max must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    StrategyReport rep;
    rep.strategy = "gi";
    rep.seed = seed;

    {
        const StrategyReport base = strategy_random(factory(1), samples_level1, seed, config);
        rep.levels.push_back(base.levels.front());
        rep.total_evals = base.total_evals;
    }

    for (int p = 2; p <= p_max; ++p) {
        const Objective obj = factory(p);
        if (obj.p != p) throw std::logic_error("objective factory returned wrong depth");
        const DepthRecord prev = rep.levels.back();

        struct Candidate {
            ParamSchedule params;
            double value;
            long evals;
        };
        std::vector<Candidate> cands;
        // the padded previous optimum evaluates to the previous value exactly,
        // carried with its cached value so the trace never increases
        cands.push_back({insert_zero_layer(prev.params, p - 1), prev.value, 0});

        std::vector<int> positions;
        if (policy == InsertPolicy::end)
            positions.push_back(p - 1);
        else
            for (int k = 0; k < p; ++k) positions.push_back(k);
        for (int pos : positions) {
            const LocalResult r = minimize_local(obj, insert_zero_layer(prev.params, pos), config);
            cands.push_back({r.params, r.value, r.evals});
        }

        long lvl_evals = 0;
        const Candidate* best = &cands.front();
        for (const auto& c : cands) {
            lvl_evals += c.evals;
            if (c.value < best->value) best = &c;
        }
        rep.levels.push_back({p, best->params, best->value, lvl_evals});
        rep.total_evals += lvl_evals;
    }
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

StrategyReport strategy_ifp(const InteractionGraph& g, const HamiltonianSpec& spec,
                            const AnsatzSpec& ansatz, int p, const AnsatzDistribution& dist,
                            std::uint64_t seed, const LocalConfig& config, int formula_restarts,
                            bool negate) {
    const auto t0 = std::chrono::steady_clock::now();
    const double avg = g.average_degree();
    if (avg < 2.0) throw std::invalid_argument("average degree below 2, no tree surrogate");
    const long d = std::lround(avg) - 1;
    const EdgeObservable obs = observable_for(spec);

    const ObjectiveFactory factory = [&obs, d, &dist, negate](int depth) {
        return formula_energy_objective(obs, depth, d, dist, negate);
    };
    const StrategyReport inner =
        strategy_gi(factory, p, formula_restarts, seed, config, InsertPolicy::end);

    const Objective gobj = graph_energy_objective(g, spec, ansatz, p, negate);
    const LocalResult polish = minimize_local(gobj, inner.levels.back().params, config);

    StrategyReport rep;
    rep.strategy = "ifp";
    rep.seed = seed;
    rep.formula_levels = inner.levels;
    rep.levels.push_back({p, polish.params, polish.value, polish.evals});
    rep.total_evals = inner.total_evals + polish.evals;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

}  // namespace hamqaoa
