#pragma once

#include <string>
#include <vector>

#include "hamqaoa/graph.hpp"
#include "hamqaoa/statevector.hpp"

namespace hamqaoa {

enum class SpecKind { qmc, heisenberg_pauli, xy, xxz, custom };

// 2-local Hamiltonian H = sum_e (cconst_e + cxx_e XX + cyy_e YY + czz_e ZZ)
//                       + sum_v cz_v Z_v
// with one coefficient entry per edge / vertex.
struct HamiltonianSpec {
    SpecKind kind = SpecKind::custom;
    InteractionGraph graph;
    std::vector<double> cconst, cxx, cyy, czz;  // per edge
    std::vector<double> cz;                     // per vertex
    double delta = 0.0, h = 0.0;                // reported for xxz

    static HamiltonianSpec preset(SpecKind kind, const InteractionGraph& g,
                                  double delta = 0.5, double h = 0.5);
    static HamiltonianSpec custom(const InteractionGraph& g, std::vector<double> cconst,
                                  std::vector<double> cxx, std::vector<double> cyy,
                                  std::vector<double> czz, std::vector<double> cz);
};

SpecKind spec_kind_from_string(const std::string& name);
std::string to_string(SpecKind kind);

double energy(const HamiltonianSpec& spec, const Statevector& psi);
double energy_density(const HamiltonianSpec& spec, const Statevector& psi);

// H|psi>, matrix free.
Statevector apply(const HamiltonianSpec& spec, const Statevector& psi);

enum class Extremum { min, max };
enum class EigenMethod { automatic, dense, iterative };

struct EigenPair {
    double value = 0.0;
    Statevector vector;
};

struct EigenSpace {
    double value = 0.0;
    std::vector<Statevector> basis;  // orthonormal
};

inline constexpr int kDenseQubitLimit = 14;
inline constexpr int kIterativeQubitLimit = 24;
inline constexpr double kDegeneracyTol = 1e-8;

// Extremal eigenpair; dense full diagonalization up to kDenseQubitLimit,
// thick-restart Lanczos beyond (up to kIterativeQubitLimit).
EigenPair extremal_eigenpair(const HamiltonianSpec& spec, Extremum which,
                             EigenMethod method = EigenMethod::automatic);

// All eigenvectors within kDegeneracyTol of the extremal eigenvalue.
// Dense path only.
EigenSpace extremal_eigenspace(const HamiltonianSpec& spec, Extremum which);

}  // namespace hamqaoa
