#pragma once

#include <vector>

#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/pointset.hpp"
#include "hamqaoa/schedule.hpp"

namespace hamqaoa {

// Degree-rescaled angles: alpha_tilde = alpha sqrt(d) stays finite as the
// degree grows.  In this limit gamma vanishes and beta is restricted to
// multiples of pi/4; initial states live on the x axis.
struct RescaledParams {
    std::vector<double> alpha_tilde, beta, delta;

    int p() const { return static_cast<int>(alpha_tilde.size()); }
    void validate() const;
    // gamma rows are zero; alpha = alpha_tilde * alpha_scale
    ParamSchedule to_schedule(double alpha_scale = 1.0) const;
};

inline constexpr int kInfiniteDepthLimit = 10;

// Second-moment matrix of the Gaussian-reweighted path measure at one level.
struct GMatrix {
    int level = 0;
    int dim = 0;  // 2p+2
    std::vector<cplx> entries;

    cplx at(int j, int k) const { return entries[static_cast<std::size_t>(j) * dim + k]; }
};

void validate_infinite_inputs(const RescaledParams& params, const AnsatzDistribution& dist);

// Levels m = 0..p-1; level 0 is the plain second-moment table of the identity
// chain weights, each later level reweights by exp of the previous level's
// quadratic form.
std::vector<GMatrix> g_sequence(const RescaledParams& params,
                                int depth_limit = kInfiniteDepthLimit);

std::vector<cplx> k_vector(const RescaledParams& params, Pauli sigma,
                           int depth_limit = kInfiniteDepthLimit);

// Limit value of -(sqrt(d)/2) <sigma_L sigma_R> per edge; zero by construction
// when either label is X (backed by the residual checks below).
double nu(const RescaledParams& params, Pauli left, Pauli right);

// nu(Y,Y) + nu(Z,Z); the rescaled Heisenberg objective to maximize.
double heisenberg_objective(const RescaledParams& params);

// |sum_z fbar_X(z) w(z)| with the level-(p-1) Gaussian weight; the limit
// analogue of the finite-degree residual check.
double assumption_residual_infinite(const RescaledParams& params);

struct ConsistencyReport {
    long d = 0;
    double nu_infinite = 0.0;
    double nu_finite_scaled = 0.0;  // -(sqrt(d)/2)(xx+yy+zz) at alpha = alpha_tilde/sqrt(d)
    double relative_deviation = 0.0;
};
ConsistencyReport consistency_with_finite(const RescaledParams& params, long d);

}  // namespace hamqaoa
