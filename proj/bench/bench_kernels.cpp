// Micro-benchmark: OpenMP statevector kernels against the serial reference
// implementations, and the factorized formula transforms against their
// quadratic-time references.  Prints one row per kernel with the median
// wall time over `reps` runs and the observed speedup.

#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/graph.hpp"
#include "hamqaoa/parallel.hpp"
#include "hamqaoa/rng.hpp"
#include "hamqaoa/statevector.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using hamqaoa::cplx;

double median_seconds(int reps, const std::function<void()>& body) {
    std::vector<double> times;
    times.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

void report(const std::string& name, double serial, double parallel, double max_diff) {
    std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   max|diff| %.3e\n",
                name.c_str(), serial * 1e3, parallel * 1e3, serial / parallel, max_diff);
}

hamqaoa::Statevector random_state(int n, std::uint64_t seed) {
    hamqaoa::RngStream rng(seed);
    hamqaoa::Statevector psi = hamqaoa::Statevector::zero_state(n);
    for (auto& a : psi.amp) a = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double scale = 1.0 / hamqaoa::norm(psi);
    for (auto& a : psi.amp) a *= scale;
    return psi;
}

double max_amp_diff(const hamqaoa::Statevector& a, const hamqaoa::Statevector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amp.size(); ++i) worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 18;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    const auto g = hamqaoa::ring_graph(std::max(3, n));
    const auto table = hamqaoa::zz_phase_table(g);

    std::printf("qubits=%d  reps=%d  workers=%d\n", g.n, reps, hamqaoa::worker_count());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        auto a = random_state(g.n, 11);
        auto b = a;
        const double ts = median_seconds(reps, [&] { hamqaoa::serial::apply_zz_phase(a, g, 0.37); });
        const double tp = median_seconds(reps, [&] { hamqaoa::apply_zz_phase(b, table, 0.37); });
        report("apply_zz_phase", ts, tp, max_amp_diff(a, b));
    }
    {
        auto a = random_state(g.n, 12);
        auto b = a;
        const double ts = median_seconds(reps, [&] { hamqaoa::serial::apply_sum_x(a, 0.21); });
        const double tp = median_seconds(reps, [&] { hamqaoa::apply_sum_x(b, 0.21); });
        report("apply_sum_x", ts, tp, max_amp_diff(a, b));
    }
    {
        auto a = random_state(g.n, 13);
        auto b = a;
        const double ts = median_seconds(reps, [&] { hamqaoa::serial::apply_sum_z(a, 0.53); });
        const double tp = median_seconds(reps, [&] { hamqaoa::apply_sum_z(b, 0.53); });
        report("apply_sum_z", ts, tp, max_amp_diff(a, b));
    }
    {
        std::vector<hamqaoa::Vec3> axes(g.n);
        for (int v = 0; v < g.n; ++v) {
            const double t = 0.1 + 0.2 * v;
            axes[v] = {std::sin(t), 0.0, std::cos(t)};
        }
        auto a = random_state(g.n, 14);
        auto b = a;
        const double ts = median_seconds(reps, [&] { hamqaoa::serial::apply_sum_axis(a, axes, 0.29); });
        const double tp = median_seconds(reps, [&] { hamqaoa::apply_sum_axis(b, axes, 0.29); });
        report("apply_sum_axis", ts, tp, max_amp_diff(a, b));
    }
    {
        const auto a = random_state(g.n, 15);
        const auto b = random_state(g.n, 16);
        cplx rs{}, rp{};
        const double ts = median_seconds(reps, [&] { rs = hamqaoa::serial::inner(a, b); });
        const double tp = median_seconds(reps, [&] { rp = hamqaoa::inner(a, b); });
        report("inner", ts, tp, std::abs(rs - rp));
    }
    {
        const auto a = random_state(g.n, 17);
        hamqaoa::PauliPair rs{}, rp{};
        const double ts = median_seconds(reps, [&] { rs = hamqaoa::serial::expect_pair(a, 0, 1); });
        const double tp = median_seconds(reps, [&] { rp = hamqaoa::expect_pair(a, 0, 1); });
        const double diff = std::max({std::abs(rs.xx - rp.xx), std::abs(rs.yy - rp.yy), std::abs(rs.zz - rp.zz)});
        report("expect_pair", ts, tp, diff);
    }

    {
        const int p = 5;
        hamqaoa::RngStream rng(18);
        std::vector<double> alpha(p);
        for (auto& x : alpha) x = rng.uniform(-1.0, 1.0);
        const auto profile = hamqaoa::phase_profile(alpha);
        std::vector<cplx> va(std::size_t{1} << (2 * p + 2));
        for (auto& x : va) x = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        std::vector<cplx> vb;
        const double ts = median_seconds(reps, [&] { vb = hamqaoa::phase_transform_reference(va, profile); });
        std::vector<cplx> vc;
        const double tp = median_seconds(reps, [&] {
            auto tmp = va;
            hamqaoa::phase_transform(tmp, profile);
            vc = tmp;
        });
        double diff = 0.0;
        for (std::size_t i = 0; i < vb.size(); ++i) diff = std::max(diff, std::abs(vb[i] - vc[i]));
        report("phase_transform (p=5)", ts, tp, diff);
    }

    return 0;
}
