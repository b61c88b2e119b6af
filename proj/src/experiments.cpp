#include "hamqaoa/experiments.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/formula_infinite.hpp"
#include "hamqaoa/graph.hpp"
#include "hamqaoa/hamiltonian.hpp"
#include "hamqaoa/optimize.hpp"
#include "hamqaoa/rng.hpp"
#include "hamqaoa/simulator.hpp"
#include "json.hpp"

namespace hamqaoa {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

struct SuiteBuilder {
    SuiteResult out;
    json manifest;
    std::uint64_t master = 0;
    std::uint64_t counter = 0;

    SuiteBuilder(const std::string& name, std::uint64_t seed) : master(seed) {
        out.name = name;
        manifest["suite"] = name;
        manifest["master_seed"] = seed;
        manifest["scale"] = "desk";
        manifest["substitutions"] = json::array();
        manifest["points"] = json::array();
        manifest["failures"] = json::array();
    }

    std::uint64_t next_seed() { return RngStream(master, counter++).raw(); }

    void note(const std::string& text) { manifest["substitutions"].push_back(text); }

    void row(const std::string& series, double x, double y, double yerr, long n,
             std::uint64_t seed) {
        out.points.push_back({series, x, y, yerr, n, seed});
        manifest["points"].push_back({{"series", series}, {"x", x}, {"seed", seed}});
    }

    void failure(const std::string& series, double x, std::uint64_t seed, const char* what) {
        manifest["failures"].push_back(
            {{"series", series}, {"x", x}, {"seed", seed}, {"error", what}});
    }

    // fn(seed) -> (y, yerr, n); guard failures keep the suite running
    template <class F>
    void point(const std::string& series, double x, F&& fn) {
        const std::uint64_t s = next_seed();
        try {
            const auto [y, yerr, n] = fn(s);
            row(series, x, y, yerr, n, s);
        } catch (const std::exception& e) {
            failure(series, x, s, e.what());
        }
    }

    SuiteResult finish() {
        out.manifest_json = manifest.dump(2) + "\n";
        return out;
    }
};

LocalConfig simplex_config() { return LocalConfig{}; }

LocalConfig gradient_config() {
    LocalConfig cfg;
    cfg.method = LocalMethod::lbfgs;
    return cfg;
}

ParamSchedule random_schedule(int p, RngStream& rng) {
    ParamSchedule th = ParamSchedule::zeros(p);
    for (auto* block : {&th.alpha, &th.beta, &th.gamma, &th.delta})
        for (auto& x : *block) x = rng.uniform(-kPi / 2.0, kPi / 2.0);
    return th;
}

double eigen_fidelity(const HamiltonianSpec& spec, Extremum which, const Statevector& psi) {
    return fidelity(psi, extremal_eigenspace(spec, which).basis);
}

// best rescaled limit over every beta pattern in {0, pi/4, pi/2, 3pi/4}^p
double nu_limit(int p, std::uint64_t seed, int restarts_per_pattern) {
    long patterns = 1;
    for (int i = 0; i < p; ++i) patterns *= 4;
    double best = std::numeric_limits<double>::infinity();
    for (long idx = 0; idx < patterns; ++idx) {
        std::vector<double> beta(p);
        long rem = idx;
        for (int l = 0; l < p; ++l) {
            beta[l] = (rem % 4) * kPi / 4.0;
            rem /= 4;
        }
        const Objective obj = infinite_limit_objective(beta, p);
        const std::uint64_t s = RngStream(seed, static_cast<std::uint64_t>(idx)).raw();
        const StrategyReport rep = strategy_random(obj, restarts_per_pattern, s, simplex_config());
        best = std::min(best, rep.best().value);
    }
    return -best;
}

// average over all 2^n sign strings of <XX+YY+ZZ> on the first edge
double exhaustive_edge_average(const InteractionGraph& g, const ParamSchedule& th) {
    if (g.n > 16) throw std::invalid_argument("exhaustive sign average guarded at 16 vertices");
    const CircuitContext ctx(g);
    const std::uint64_t total = 1ULL << g.n;
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SignString s(g.n);
        for (int v = 0; v < g.n; ++v) s[v] = ((mask >> v) & 1ULL) ? -1 : 1;
        const Statevector psi = prepare_hqs(ctx, AnsatzSpec(SimplifiedAnsatz{s}), th);
        const PauliPair pp = expect_pair(psi, g.edges[0].u, g.edges[0].v);
        acc += pp.xx + pp.yy + pp.zz;
    }
    return acc / static_cast<double>(total);
}

SuiteResult suite_fig2(std::uint64_t seed) {
    SuiteBuilder b("fig2", seed);
    b.note("depths 1..2, degrees {3, 10, 33}, simplex restarts 6/4");
    for (int p = 1; p <= 2; ++p) {
        const std::string tag = "p" + std::to_string(p);
        const std::uint64_t limit_seed = b.next_seed();
        double limit = 0.0;
        bool have_limit = false;
        try {
            limit = nu_limit(p, limit_seed, p == 1 ? 3 : 2);
            have_limit = true;
        } catch (const std::exception& e) {
            b.failure(tag + "-limit", 0.0, limit_seed, e.what());
        }
        for (long d : {3L, 10L, 33L}) {
            b.point(tag + "-finite", static_cast<double>(d), [&](std::uint64_t s) {
                const int restarts = p == 1 ? 6 : 4;
                const Objective obj = formula_energy_objective(
                    EdgeObservable::heisenberg(), p, d, AnsatzDistribution::signed_x(), false);
                const StrategyReport rep = strategy_random(obj, restarts, s, simplex_config());
                const double y = -rep.best().value * std::sqrt(static_cast<double>(d)) / 2.0;
                return std::tuple{y, 0.0, static_cast<long>(restarts)};
            });
            if (have_limit)
                b.row(tag + "-limit", static_cast<double>(d), limit, 0.0, 1, limit_seed);
        }
    }
    return b.finish();
}

SuiteResult suite_fig3(std::uint64_t seed) {
    SuiteBuilder b("fig3", seed);
    b.note("ring branch d=1 p<=3 exhaustive over all sign strings; heawood branch d=2 at p=1");
    for (int p = 1; p <= 3; ++p) {
        b.point("ring-d1", p, [&](std::uint64_t s) {
            RngStream rng(s);
            const ParamSchedule th = random_schedule(p, rng);
            const InteractionGraph g = ring_graph(2 * p + 2);
            const PairExpectations pe =
                pair_expectations(th, 1, AnsatzDistribution::signed_x());
            const double diff =
                std::abs((pe.xx + pe.yy + pe.zz) - exhaustive_edge_average(g, th));
            return std::tuple{diff, 0.0, static_cast<long>(1ULL << g.n)};
        });
    }
    b.point("heawood-d2", 1, [&](std::uint64_t s) {
        RngStream rng(s);
        const ParamSchedule th = random_schedule(1, rng);
        const InteractionGraph g = heawood_graph();
        const PairExpectations pe = pair_expectations(th, 2, AnsatzDistribution::signed_x());
        const double diff = std::abs((pe.xx + pe.yy + pe.zz) - exhaustive_edge_average(g, th));
        return std::tuple{diff, 0.0, static_cast<long>(1ULL << g.n)};
    });
    return b.finish();
}

SuiteResult suite_fig4(std::uint64_t seed) {
    SuiteBuilder b("fig4", seed);
    b.note("ring(8) instead of large rings; greedy interpolation to p=5, 8 level-1 samples");
    const std::uint64_t s = b.next_seed();
    try {
        const InteractionGraph g = ring_graph(8);
        const HamiltonianSpec spec = HamiltonianSpec::preset(SpecKind::qmc, g);
        const AnsatzSpec ans = SimplifiedAnsatz{choose_signs(g, SignPolicy::exact, 0)};
        const ObjectiveFactory factory = [&](int p) {
            return graph_energy_objective(g, spec, ans, p, true);
        };
        const StrategyReport rep = strategy_gi(factory, 5, 8, s, simplex_config());
        const double lambda = extremal_eigenpair(spec, Extremum::max).value;
        for (const auto& lvl : rep.levels)
            b.row("ratio", lvl.p, -lvl.value / lambda, 0.0, 1, s);
    } catch (const std::exception& e) {
        b.failure("ratio", 0.0, s, e.what());
    }
    return b.finish();
}

SuiteResult suite_fig5(std::uint64_t seed) {
    SuiteBuilder b("fig5", seed);
    b.note("N in {4, 6, 8}; deep branch restarts 10 with gradient descent, shallow 8");
    for (int N : {4, 6, 8}) {
        const InteractionGraph g = ring_graph(N);
        const HamiltonianSpec spec = HamiltonianSpec::preset(SpecKind::qmc, g);
        const AnsatzSpec ans = SimplifiedAnsatz{choose_signs(g, SignPolicy::exact, 0)};
        b.point("p1", N, [&](std::uint64_t s) {
            const Objective obj = graph_energy_objective(g, spec, ans, 1, true);
            const StrategyReport rep = strategy_random(obj, 8, s, simplex_config());
            const Statevector psi = prepare_hqs(g, ans, rep.best().params);
            return std::tuple{eigen_fidelity(spec, Extremum::max, psi), 0.0, 8L};
        });
        b.point("p2N", N, [&](std::uint64_t s) {
            const Objective obj = graph_energy_objective(g, spec, ans, 2 * N, true);
            const StrategyReport rep = strategy_random(obj, 10, s, gradient_config());
            const Statevector psi = prepare_hqs(g, ans, rep.best().params);
            return std::tuple{eigen_fidelity(spec, Extremum::max, psi), 0.0, 10L};
        });
    }
    return b.finish();
}

SuiteResult suite_fig6(std::uint64_t seed) {
    SuiteBuilder b("fig6", seed);
    b.note("N in {4, 6}; smallest depth reaching XY ground fidelity 0.999, depths up to N");
    for (int N : {4, 6}) {
        const std::uint64_t s = b.next_seed();
        try {
            const InteractionGraph g = ring_graph(N);
            const HamiltonianSpec spec = HamiltonianSpec::preset(SpecKind::xy, g);
            const AnsatzSpec ans = SimplifiedAnsatz{choose_signs(g, SignPolicy::exact, 0)};
            int depth = 0;
            double best_fid = 0.0;
            for (int p = 1; p <= N; ++p) {
                const Objective obj = graph_energy_objective(g, spec, ans, p, false);
                const StrategyReport rep =
                    strategy_random(obj, 8, RngStream(s, p).raw(), gradient_config());
                const Statevector psi = prepare_hqs(g, ans, rep.best().params);
                const double fid = eigen_fidelity(spec, Extremum::min, psi);
                best_fid = std::max(best_fid, fid);
                if (fid >= 0.999) {
                    depth = p;
                    break;
                }
            }
            if (depth > 0) {
                b.row("depth", N, depth, 0.0, 8, s);
                b.row("fidelity", N, best_fid, 0.0, 8, s);
            } else {
                b.failure("depth", N, s, "no depth up to N reached fidelity 0.999");
            }
        } catch (const std::exception& e) {
            b.failure("depth", N, s, e.what());
        }
    }
    return b.finish();
}

SuiteResult suite_fig7(std::uint64_t seed) {
    SuiteBuilder b("fig7", seed);
    b.note("XXZ delta=h=0.5 on rings N in {4, 6} at depth 2N, restarts 10 gradient descent");
    for (int N : {4, 6}) {
        b.point("fidelity", N, [&](std::uint64_t s) {
            const InteractionGraph g = ring_graph(N);
            const HamiltonianSpec spec = HamiltonianSpec::preset(SpecKind::xxz, g, 0.5, 0.5);
            const AnsatzSpec ans = SimplifiedAnsatz{choose_signs(g, SignPolicy::exact, 0)};
            const Objective obj = graph_energy_objective(g, spec, ans, 2 * N, false);
            const StrategyReport rep = strategy_random(obj, 10, s, gradient_config());
            const Statevector psi = prepare_hqs(g, ans, rep.best().params);
            return std::tuple{eigen_fidelity(spec, Extremum::min, psi), 0.0, 10L};
        });
    }
    return b.finish();
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t master_seed) {
    if (name == "fig2") return suite_fig2(master_seed);
    if (name == "fig3") return suite_fig3(master_seed);
    if (name == "fig4") return suite_fig4(master_seed);
    if (name == "fig5") return suite_fig5(master_seed);
    if (name == "fig6") return suite_fig6(master_seed);
    if (name == "fig7") return suite_fig7(master_seed);
    throw std::invalid_argument("unknown suite " + name + " (expected fig2..fig7)");
}

std::string suite_csv(const SuiteResult& result) {
    std::ostringstream os;
    os.precision(17);
    os << "series,x,y,yerr,n,seed\n";
    for (const auto& pt : result.points)
        os << pt.series << ',' << pt.x << ',' << pt.y << ',' << pt.yerr << ',' << pt.n << ','
           << pt.seed << '\n';
    return os.str();
}

}  // namespace hamqaoa
