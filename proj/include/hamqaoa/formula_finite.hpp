#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hamqaoa/bitpath.hpp"
#include "hamqaoa/pointset.hpp"
#include "hamqaoa/schedule.hpp"
#include "hamqaoa/statevector.hpp"

namespace hamqaoa {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

const char* pauli_name(Pauli s);
Pauli pauli_from_name(std::string_view name);

// Per-path chain weights for one Pauli insertion, averaged over the ansatz
// distribution.  Indexed by packed path, 4^{p+1} entries.
struct FBarTable {
    int p = 0;
    Pauli sigma = Pauli::I;
    std::vector<cplx> values;
};

// Level-k table of the degree-d recursion over the same path space.
struct HTable {
    int p = 0;
    int level = 0;
    long d = 1;
    std::vector<cplx> values;
};

// Per-edge observable c_i + c_xx XX + c_yy YY + c_zz ZZ.
struct EdgeObservable {
    double c_i = 0.0, c_xx = 0.0, c_yy = 0.0, c_zz = 0.0;

    static EdgeObservable qmc() { return {0.5, -0.5, -0.5, -0.5}; }
    static EdgeObservable heisenberg() { return {0.0, 1.0, 1.0, 1.0}; }
    static EdgeObservable xy() { return {0.0, 1.0, 1.0, 0.0}; }
    static EdgeObservable xxz(double delta) { return {0.0, 1.0, 1.0, delta}; }
};

inline constexpr int kFiniteDepthLimit = 6;
inline constexpr long kFiniteDegreeLimit = 1000000;

// Chain weight for a single (m, n) pair on a single path, unaveraged.
cplx f_value(Pauli sigma, const Vec3& m, const Vec3& n, const ParamSchedule& theta,
             std::uint32_t path);

// Streaming form of the averaged chain weights: all four Pauli values for one
// path without materializing tables.  The degree-rescaled limit runs on this
// to keep its memory footprint polynomial in p.
class FBarEvaluator {
  public:
    FBarEvaluator(const ParamSchedule& theta, const AnsatzDistribution& dist);

    std::array<cplx, 4> operator()(std::uint32_t path) const;
    int depth() const { return p_; }

  private:
    int p_ = 0;
    std::vector<double> weights_;  // one per component
    std::vector<cplx> coef_;       // 2 per component: <bit|m>
    std::vector<cplx> layers_;     // 4p per component, layer-major 2x2 blocks
};

FBarTable fbar_table(Pauli sigma, const ParamSchedule& theta, const AnsatzDistribution& dist);
// All four tables in one pass over paths; indexed by static_cast<int>(Pauli).
std::array<FBarTable, 4> fbar_tables(const ParamSchedule& theta, const AnsatzDistribution& dist);

// Per-slot phase coefficients (alpha_1..alpha_p, 0, 0, -alpha_p..-alpha_1).
std::vector<double> phase_profile(const std::vector<double>& alpha);

// In-place v(z) <- sum_x exp(i sum_s profile_s x_s z_s) v(x).  Factorizes into
// one 2x2 butterfly per slot, so it costs O(bits 2^bits) instead of O(4^bits).
void phase_transform(std::vector<cplx>& values, const std::vector<double>& profile);
// Direct double sum, serial; testing and benchmarking reference.
std::vector<cplx> phase_transform_reference(const std::vector<cplx>& values,
                                            const std::vector<double>& profile);

HTable h_iterate(const FBarTable& fbar_identity, const std::vector<double>& alpha, long d,
                 int level = -1, int depth_limit = kFiniteDepthLimit);
HTable h_iterate_reference(const FBarTable& fbar_identity, const std::vector<double>& alpha,
                           long d, int level = -1);

double edge_expectation(Pauli left, Pauli right, const ParamSchedule& theta, long d,
                        const AnsatzDistribution& dist, int depth_limit = kFiniteDepthLimit);

struct PairExpectations {
    double xx = 0.0, yy = 0.0, zz = 0.0;
};
PairExpectations pair_expectations(const ParamSchedule& theta, long d,
                                   const AnsatzDistribution& dist,
                                   int depth_limit = kFiniteDepthLimit);

double objective_energy(const EdgeObservable& obs, const ParamSchedule& theta, long d,
                        const AnsatzDistribution& dist, int depth_limit = kFiniteDepthLimit);

// |sum_a fbar_X(a) H^{(k)}(a)| in the zero-gamma, beta = multiples of pi/4
// regime with x-axis initial states; small values back the X-channel zero
// branch of the infinite-degree limit.
double assumption_residual(const ParamSchedule& theta, long d, int k);

}  // namespace hamqaoa
