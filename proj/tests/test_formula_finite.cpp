#include "doctest.h"

#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/rng.hpp"
#include "hamqaoa/simulator.hpp"

#include <cmath>
#include <stdexcept>

using namespace hamqaoa;

namespace {

ParamSchedule random_schedule(int p, std::uint64_t seed) {
    RngStream rng(seed);
    auto th = ParamSchedule::zeros(p);
    for (int l = 0; l < p; ++l) {
        th.alpha[l] = rng.uniform(-1.5, 1.5);
        th.beta[l] = rng.uniform(-1.5, 1.5);
        th.gamma[l] = rng.uniform(-1.5, 1.5);
        th.delta[l] = rng.uniform(-1.5, 1.5);
    }
    return th;
}

// Expectations on one ring edge averaged over every sign assignment, the
// regime the degree-1 prediction describes exactly when the ring is longer
// than the depth-p lightcone.
PairExpectations exhaustive_ring_average(int n, const ParamSchedule& theta) {
    const auto g = ring_graph(n);
    const CircuitContext ctx(g);
    PairExpectations avg;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        SignString signs(n);
        for (int v = 0; v < n; ++v) signs[v] = (bits >> v) & 1u ? -1 : 1;
        const auto psi = prepare_hqs(ctx, SimplifiedAnsatz{signs}, theta);
        const auto pp = expect_pair(psi, 0, 1);
        avg.xx += pp.xx;
        avg.yy += pp.yy;
        avg.zz += pp.zz;
    }
    avg.xx /= total;
    avg.yy /= total;
    avg.zz /= total;
    return avg;
}

}  // namespace

TEST_CASE("degree-1 prediction matches the exhaustive circuit average") {
    for (int p : {1, 2}) {
        const auto theta = random_schedule(p, 70 + p);
        const auto pred = pair_expectations(theta, 1, AnsatzDistribution::signed_x());
        const auto exact = exhaustive_ring_average(2 * p + 2, theta);
        CHECK(std::abs(pred.xx - exact.xx) < 1e-10);
        CHECK(std::abs(pred.yy - exact.yy) < 1e-10);
        CHECK(std::abs(pred.zz - exact.zz) < 1e-10);
    }
}

TEST_CASE("depth-1 zz closed form") {
    // With only alpha and delta active the edge correlation reduces to
    // sin(4 alpha) sin(4 delta) / 2.
    for (double alpha : {0.3, -0.45}) {
        for (double dlt : {0.6, 0.2}) {
            auto th = ParamSchedule::zeros(1);
            th.alpha[0] = alpha;
            th.delta[0] = dlt;
            const double zz = edge_expectation(Pauli::Z, Pauli::Z, th, 1, AnsatzDistribution::signed_x());
            CHECK(zz == doctest::Approx(0.5 * std::sin(4 * alpha) * std::sin(4 * dlt)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fbar tables agree across the three evaluation paths") {
    const auto theta = random_schedule(2, 81);
    const auto dist = AnsatzDistribution::signed_x();
    const auto all = fbar_tables(theta, dist);
    const FBarEvaluator eval(theta, dist);
    const PathSpace ps(2);
    for (Pauli sigma : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
        const auto single = fbar_table(sigma, theta, dist);
        const auto& batch = all[static_cast<int>(sigma)];
        REQUIRE(single.values.size() == ps.count());
        for (std::uint32_t a = 0; a < ps.count(); ++a) {
            CHECK(std::abs(single.values[a] - batch.values[a]) < 1e-14);
            CHECK(std::abs(eval(a)[static_cast<int>(sigma)] - single.values[a]) < 1e-13);
        }
    }
}

TEST_CASE("fbar is the distribution average of f_value") {
    const auto theta = random_schedule(1, 83);
    const auto table = fbar_table(Pauli::Y, theta, AnsatzDistribution::signed_x());
    const PathSpace ps(1);
    const Vec3 px{1.0, 0.0, 0.0}, mx{-1.0, 0.0, 0.0};
    for (std::uint32_t a = 0; a < ps.count(); ++a) {
        const cplx manual =
            0.5 * f_value(Pauli::Y, px, px, theta, a) + 0.5 * f_value(Pauli::Y, mx, mx, theta, a);
        CHECK(std::abs(table.values[a] - manual) < 1e-13);
    }
}

TEST_CASE("phase transform equals the quadratic reference") {
    RngStream rng(85);
    for (int p : {1, 2, 3}) {
        std::vector<double> alpha(p);
        for (auto& x : alpha) x = rng.uniform(-1.5, 1.5);
        const auto profile = phase_profile(alpha);
        std::vector<cplx> values(std::size_t{1} << (2 * p + 2));
        for (auto& v : values) v = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const auto want = phase_transform_reference(values, profile);
        auto got = values;
        phase_transform(got, profile);
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-11);
    }
    CHECK_THROWS_AS(phase_transform_reference({cplx{1.0}}, {0.1, 0.2}), std::invalid_argument);
    std::vector<cplx> wrong(4);
    CHECK_THROWS_AS(phase_transform(wrong, {0.1, 0.2, 0.3}), std::invalid_argument);
}

TEST_CASE("phase profile layout") {
    const auto prof = phase_profile({0.1, 0.2});
    REQUIRE(prof.size() == 6);
    CHECK(prof[0] == doctest::Approx(0.1));
    CHECK(prof[1] == doctest::Approx(0.2));
    CHECK(prof[2] == doctest::Approx(0.0));
    CHECK(prof[3] == doctest::Approx(0.0));
    CHECK(prof[4] == doctest::Approx(-0.2));
    CHECK(prof[5] == doctest::Approx(-0.1));
}

TEST_CASE("level recursion matches its reference") {
    const auto theta = random_schedule(2, 87);
    const auto fbar = fbar_table(Pauli::I, theta, AnsatzDistribution::signed_x());
    for (long d : {1L, 3L}) {
        for (int level : {0, 1, -1}) {
            const auto fast = h_iterate(fbar, theta.alpha, d, level);
            const auto slow = h_iterate_reference(fbar, theta.alpha, d, level);
            REQUIRE(fast.values.size() == slow.values.size());
            CHECK(fast.level == slow.level);
            CHECK(fast.d == d);
            for (std::size_t i = 0; i < fast.values.size(); ++i)
                CHECK(std::abs(fast.values[i] - slow.values[i]) < 1e-10);
        }
    }
}

TEST_CASE("objective energy is the linear combination of pair expectations") {
    const auto theta = random_schedule(2, 89);
    const auto dist = AnsatzDistribution::signed_x();
    const auto pp = pair_expectations(theta, 3, dist);
    const auto obs = EdgeObservable::qmc();
    const double want = obs.c_i + obs.c_xx * pp.xx + obs.c_yy * pp.yy + obs.c_zz * pp.zz;
    CHECK(objective_energy(obs, theta, 3, dist) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("edge expectation is symmetric in its two insertions") {
    const auto theta = random_schedule(2, 91);
    const auto dist = AnsatzDistribution::signed_x();
    for (auto [l, r] : {std::pair{Pauli::X, Pauli::Z}, {Pauli::Y, Pauli::X}, {Pauli::Z, Pauli::Y}}) {
        CHECK(edge_expectation(l, r, theta, 2, dist) ==
              doctest::Approx(edge_expectation(r, l, theta, 2, dist)).epsilon(1e-10));
    }
}

TEST_CASE("coupled x pointset reproduces the signed x distribution") {
    PointSet ps;
    ps.points.push_back({{1.0, 0.0, 0.0}, 0.5});
    ps.points.push_back({{-1.0, 0.0, 0.0}, 0.5});
    const auto coupled = AnsatzDistribution::coupled(ps);
    CHECK(coupled.x_axis_only());
    const auto theta = random_schedule(2, 93);
    const auto a = pair_expectations(theta, 2, AnsatzDistribution::signed_x());
    const auto b = pair_expectations(theta, 2, coupled);
    CHECK(a.xx == doctest::Approx(b.xx).epsilon(1e-12));
    CHECK(a.yy == doctest::Approx(b.yy).epsilon(1e-12));
    CHECK(a.zz == doctest::Approx(b.zz).epsilon(1e-12));
}

TEST_CASE("observable presets") {
    const auto qmc = EdgeObservable::qmc();
    CHECK(qmc.c_i == 0.5);
    CHECK(qmc.c_xx == -0.5);
    const auto xxz = EdgeObservable::xxz(0.7);
    CHECK(xxz.c_zz == doctest::Approx(0.7));
    CHECK(xxz.c_i == 0.0);
}

TEST_CASE("depth and degree guards") {
    const auto dist = AnsatzDistribution::signed_x();
    const auto seven = random_schedule(7, 95);
    CHECK_THROWS_AS(pair_expectations(seven, 1, dist), std::invalid_argument);
    // Explicitly raising the limit unlocks deeper evaluation.
    const double v = edge_expectation(Pauli::Z, Pauli::Z, seven, 1, dist, 7);
    CHECK(std::isfinite(v));

    const auto two = random_schedule(2, 96);
    CHECK_THROWS_AS(pair_expectations(two, 0, dist), std::invalid_argument);
    CHECK_THROWS_AS(pair_expectations(two, kFiniteDegreeLimit + 1, dist), std::invalid_argument);
    CHECK(std::isfinite(edge_expectation(Pauli::Z, Pauli::Z, two, kFiniteDegreeLimit, dist)));
}

TEST_CASE("pointset validation") {
    PointSet bad;
    bad.points.push_back({{1.0, 0.0, 0.0}, 0.6});
    bad.points.push_back({{0.0, 1.0, 0.0}, 0.5});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // weights sum to 1.1
    PointSet off;
    off.points.push_back({{0.5, 0.0, 0.0}, 1.0});
    CHECK_THROWS_AS(off.validate(), std::invalid_argument);  // direction not unit
    PointSet ok;
    ok.points.push_back({{0.0, 0.0, 1.0}, 1.0});
    CHECK_NOTHROW(ok.validate());
    CHECK_FALSE(AnsatzDistribution::coupled(ok).x_axis_only());
}
