#include "doctest.h"

#include "hamqaoa/optimize.hpp"
#include "hamqaoa/rng.hpp"

#include <cmath>
#include <stdexcept>

using namespace hamqaoa;

namespace {

ParamSchedule with_zero_layer(const ParamSchedule& th, int pos) {
    auto insert = [pos](const std::vector<double>& v) {
        std::vector<double> out(v.begin(), v.begin() + pos);
        out.push_back(0.0);
        out.insert(out.end(), v.begin() + pos, v.end());
        return out;
    };
    ParamSchedule out;
    out.alpha = insert(th.alpha);
    out.beta = insert(th.beta);
    out.gamma = insert(th.gamma);
    out.delta = insert(th.delta);
    return out;
}

SignString alternating(int n) {
    SignString s;
    for (int v = 0; v < n; ++v) s.push_back(v % 2 == 0 ? 1 : -1);
    return s;
}

// Mean energy over every sign assignment of the simplified ansatz.  On a ring
// whose girth exceeds the causal diameter of the circuit this average equals
// the per-edge iteration exactly, edge count times.
Objective sign_averaged_objective(const InteractionGraph& g, const HamiltonianSpec& spec,
                                  int p) {
    Objective obj;
    obj.p = p;
    obj.value = [&g, &spec, ctx = CircuitContext(g)](const ParamSchedule& th) {
        const int n = g.n;
        const unsigned count = 1u << n;
        double acc = 0.0;
        for (unsigned m = 0; m < count; ++m) {
            SignString s(n);
            for (int v = 0; v < n; ++v) s[v] = ((m >> v) & 1u) ? -1 : 1;
            acc += energy(spec, prepare_hqs(ctx, SimplifiedAnsatz{s}, th));
        }
        return -acc / static_cast<double>(count);
    };
    return obj;
}

}  // namespace

TEST_CASE("zero layer insertion preserves the circuit value") {
    const auto g = ring_graph(6);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const AnsatzSpec ansatz = SimplifiedAnsatz{alternating(6)};
    const auto obj2 = graph_energy_objective(g, spec, ansatz, 2, true);
    const auto obj3 = graph_energy_objective(g, spec, ansatz, 3, true);

    RngStream rng(77, 0);
    for (int trial = 0; trial < 5; ++trial) {
        ParamSchedule th;
        for (int l = 0; l < 2; ++l) {
            th.alpha.push_back(rng.uniform(-1.2, 1.2));
            th.beta.push_back(rng.uniform(-1.2, 1.2));
            th.gamma.push_back(rng.uniform(-1.2, 1.2));
            th.delta.push_back(rng.uniform(-1.2, 1.2));
        }
        const double base = obj2.value(th);
        for (int pos = 0; pos <= 2; ++pos) {
            const auto padded = with_zero_layer(th, pos);
            REQUIRE(padded.p() == 3);
            CHECK(std::abs(obj3.value(padded) - base) < 1e-12);
        }
    }
}

TEST_CASE("random restarts reach the ring(4) optimum") {
    const auto g = ring_graph(4);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const auto obj = graph_energy_objective(g, spec, SimplifiedAnsatz{alternating(4)}, 4, true);

    const auto rep = strategy_random(obj, 50, 1);
    CHECK(rep.strategy == "random");
    CHECK(rep.seed == 1);
    REQUIRE(rep.levels.size() == 1);
    CHECK(rep.levels[0].p == 4);
    CHECK(rep.levels[0].evals == rep.total_evals);
    CHECK(-rep.best().value >= 6.0 - 1e-3);
}

TEST_CASE("gi traces are monotone and deterministic") {
    const auto g = ring_graph(6);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const AnsatzSpec ansatz = SimplifiedAnsatz{alternating(6)};
    const auto factory = [&](int p) { return graph_energy_objective(g, spec, ansatz, p, true); };

    const auto rep = strategy_gi(factory, 4, 4, 3);
    CHECK(rep.strategy == "gi");
    REQUIRE(rep.levels.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(rep.levels[k].p == k + 1);
    for (int k = 1; k < 4; ++k) CHECK(rep.levels[k].value <= rep.levels[k - 1].value);
    CHECK(rep.best().value == rep.levels[3].value);
    CHECK(rep.best().value == doctest::Approx(-25.0 / 3.0).epsilon(1e-6));

    const auto again = strategy_gi(factory, 4, 4, 3);
    REQUIRE(again.levels.size() == rep.levels.size());
    for (size_t k = 0; k < rep.levels.size(); ++k) {
        CHECK(again.levels[k].value == rep.levels[k].value);
        CHECK(again.levels[k].params.flat() == rep.levels[k].params.flat());
    }

    const auto wide = strategy_gi(factory, 4, 4, 3, {}, InsertPolicy::all_positions);
    REQUIRE(wide.levels.size() == 4);
    for (int k = 1; k < 4; ++k) CHECK(wide.levels[k].value <= wide.levels[k - 1].value);
    CHECK(wide.best().value == doctest::Approx(-25.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("ifp stays put when the polished objective averages over signs") {
    const auto g = ring_graph(6);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const auto rep = strategy_ifp(g, spec, SimplifiedAnsatz{alternating(6)}, 1,
                                  AnsatzDistribution::signed_x(), 5);
    REQUIRE(rep.formula_levels.size() == 1);
    const auto& fstar = rep.formula_levels.back();

    const auto avg = sign_averaged_objective(g, spec, 1);
    const double at_start = avg.value(fstar.params);
    CHECK(std::abs(at_start - 6.0 * fstar.value) < 1e-8);

    const auto polish = minimize_local(avg, fstar.params);
    CHECK(std::abs(at_start - polish.value) < 1e-6);
}

TEST_CASE("ifp reports its formula trace and the graph polish") {
    const auto g = ring_graph(10);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const AnsatzSpec ansatz = SimplifiedAnsatz{alternating(10)};
    const auto rep = strategy_ifp(g, spec, ansatz, 2, AnsatzDistribution::signed_x(), 5);

    CHECK(rep.strategy == "ifp");
    REQUIRE(rep.formula_levels.size() == 2);
    CHECK(rep.formula_levels[0].p == 1);
    CHECK(rep.formula_levels[1].p == 2);
    REQUIRE(rep.levels.size() == 1);
    CHECK(rep.levels[0].p == 2);

    long expected = rep.levels[0].evals;
    for (const auto& lv : rep.formula_levels) expected += lv.evals;
    CHECK(rep.total_evals == expected);

    // the polish starts from the formula optimum and never regresses
    const auto gobj = graph_energy_objective(g, spec, ansatz, 2, true);
    const double at_start = gobj.value(rep.formula_levels.back().params);
    CHECK(rep.levels[0].value <= at_start + 1e-12);

    // girth 10 exceeds the p=2 causal diameter, so the sign average matches
    // the per-edge prediction at the formula optimum
    const auto avg = sign_averaged_objective(g, spec, 2);
    const double averaged = avg.value(rep.formula_levels.back().params);
    CHECK(std::abs(averaged - 10.0 * rep.formula_levels.back().value) < 1e-8);
}

TEST_CASE("ifp outperforms gi on the complete graph at equal statevector budget") {
    const auto g = complete_graph(16);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, g);
    const auto signs = choose_signs(g, SignPolicy::exact);
    const AnsatzSpec ansatz = SimplifiedAnsatz{signs};

    const auto ifp = strategy_ifp(g, spec, ansatz, 2, AnsatzDistribution::signed_x(), 11);
    const auto factory = [&](int p) { return graph_energy_objective(g, spec, ansatz, p, true); };
    const auto gi = strategy_gi(factory, 2, 4, 11);

    // gi spends every evaluation on the statevector; ifp only spends its
    // polish stage there and still lands lower
    CHECK(ifp.levels[0].evals <= gi.total_evals);
    CHECK(ifp.best().value <= gi.best().value + 1e-9);
    CHECK(ifp.best().value < -70.9);
    CHECK(gi.best().value < -70.7);
}

TEST_CASE("strategies validate their inputs") {
    const auto ring = ring_graph(6);
    const auto spec = HamiltonianSpec::preset(SpecKind::qmc, ring);
    const auto obj = graph_energy_objective(ring, spec, SimplifiedAnsatz{alternating(6)}, 1, true);
    CHECK_THROWS_AS(strategy_random(obj, 0, 1), std::invalid_argument);

    const auto factory = [&](int p) {
        return graph_energy_objective(ring, spec, SimplifiedAnsatz{alternating(6)}, p, true);
    };
    CHECK_THROWS_AS(strategy_gi(factory, 0, 4, 1), std::invalid_argument);

    // a path's average degree sits below two, so no regular tree approximates it
    const auto path = path_graph(6);
    const auto pspec = HamiltonianSpec::preset(SpecKind::qmc, path);
    CHECK_THROWS_AS(strategy_ifp(path, pspec, SimplifiedAnsatz{alternating(6)}, 1,
                                 AnsatzDistribution::signed_x(), 1),
                    std::invalid_argument);

    // a custom spec has no per-edge surrogate for the formula stage
    const auto custom = HamiltonianSpec::custom(
        ring, std::vector<double>(6, 0.0), std::vector<double>(6, 1.0),
        std::vector<double>(6, 0.0), std::vector<double>(6, 0.0), std::vector<double>(6, 0.0));
    CHECK_THROWS_AS(strategy_ifp(ring, custom, SimplifiedAnsatz{alternating(6)}, 1,
                                 AnsatzDistribution::signed_x(), 1),
                    std::invalid_argument);
}
