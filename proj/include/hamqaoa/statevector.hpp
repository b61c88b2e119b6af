#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "hamqaoa/graph.hpp"

namespace hamqaoa {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

// Dense state on n qubits, little endian: qubit 0 is the least significant
// bit of the amplitude index, and bit value 0 encodes spin z = +1.
struct Statevector {
    int n = 0;
    std::vector<cplx> amp;

    static Statevector zero_state(int n);
    std::size_t dim() const { return amp.size(); }
};

inline int spin_of_bit(std::uint64_t index, int qubit) {
    return ((index >> qubit) & 1ULL) ? -1 : 1;
}

// Product state of +/-x eigenstates given by signs.
Statevector product_x_state(const SignString& signs);
// Product of Bloch states cos(t/2)|0> + e^{i phi} sin(t/2)|1> for unit m_v.
Statevector product_bloch_state(const std::vector<Vec3>& bloch);

double norm(const Statevector& psi);
cplx inner(const Statevector& a, const Statevector& b);
double fidelity(const Statevector& psi, const Statevector& target);
// Squared projection onto the span of an orthonormal basis.
double fidelity(const Statevector& psi, const std::vector<Statevector>& basis);

// Per-index value of sum_{(u,v) in E} w_uv z_u z_v; reusable phase table.
std::vector<double> zz_phase_table(const InteractionGraph& g);

// exp(-i angle sum_uv w z_u z_v), optionally with a precomputed table.
void apply_zz_phase(Statevector& psi, const InteractionGraph& g, double angle);
void apply_zz_phase(Statevector& psi, const std::vector<double>& table, double angle);
// exp(-i angle sum_v X_v)
void apply_sum_x(Statevector& psi, double angle);
// exp(-i angle sum_v Z_v)
void apply_sum_z(Statevector& psi, double angle);
// exp(-i angle sum_v s_v X_v)
void apply_sum_sx(Statevector& psi, const SignString& signs, double angle);
// exp(-i angle sum_v n_v . sigma_v)
void apply_sum_axis(Statevector& psi, const std::vector<Vec3>& axes, double angle);
// Arbitrary 4x4 gate on qubits (u, v), row-major in basis |b_v b_u>.
void apply_two_qubit(Statevector& psi, int u, int v, const std::array<cplx, 16>& gate);

// <psi| X_u X_v |psi>, <psi| Y_u Y_v |psi>, <psi| Z_u Z_v |psi>
struct PauliPair {
    double xx = 0.0, yy = 0.0, zz = 0.0;
};
PauliPair expect_pair(const Statevector& psi, int u, int v);
double expect_z(const Statevector& psi, int v);

// Straightforward single-threaded kernels kept as the reference
// implementation; the parallel kernels above must match them bit for bit
// (elementwise ops) or to reduction tolerance (inner products).
namespace serial {
void apply_zz_phase(Statevector& psi, const InteractionGraph& g, double angle);
void apply_sum_x(Statevector& psi, double angle);
void apply_sum_z(Statevector& psi, double angle);
void apply_sum_sx(Statevector& psi, const SignString& signs, double angle);
void apply_sum_axis(Statevector& psi, const std::vector<Vec3>& axes, double angle);
cplx inner(const Statevector& a, const Statevector& b);
PauliPair expect_pair(const Statevector& psi, int u, int v);
}  // namespace serial

}  // namespace hamqaoa
