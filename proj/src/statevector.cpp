#include "hamqaoa/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "hamqaoa/parallel.hpp"

namespace hamqaoa {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > 28) throw std::domain_error("statevector supports 1..28 qubits");
}

// Index with a zero inserted at bit position q, enumerated by h < 2^(n-1).
inline std::uint64_t with_cleared_bit(std::uint64_t h, int q) {
    const std::uint64_t low = h & ((1ULL << q) - 1);
    return ((h >> q) << (q + 1)) | low;
}

void single_qubit_kernel(Statevector& psi, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
    const std::uint64_t half = psi.dim() >> 1;
    const std::uint64_t bit = 1ULL << q;
    cplx* a = psi.amp.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long h = 0; h < static_cast<long long>(half); ++h) {
        const std::uint64_t i0 = with_cleared_bit(static_cast<std::uint64_t>(h), q);
        const std::uint64_t i1 = i0 | bit;
        const cplx a0 = a[i0], a1 = a[i1];
        a[i0] = m00 * a0 + m01 * a1;
        a[i1] = m10 * a0 + m11 * a1;
    }
}

struct PauliAcc {
    cplx xx{}, yy{};
    double zz = 0.0;
    PauliAcc& operator+=(const PauliAcc& o) {
        xx += o.xx;
        yy += o.yy;
        zz += o.zz;
        return *this;
    }
};

}  // namespace

Statevector Statevector::zero_state(int n) {
    check_qubit_count(n);
    Statevector psi;
    psi.n = n;
    psi.amp.assign(1ULL << n, cplx{0.0, 0.0});
    psi.amp[0] = 1.0;
    return psi;
}

Statevector product_x_state(const SignString& signs) {
    const int n = static_cast<int>(signs.size());
    check_qubit_count(n);
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    Statevector psi;
    psi.n = n;
    psi.amp.resize(1ULL << n);
    const double scale = std::pow(2.0, -0.5 * n);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        double sign = 1.0;
        for (int q = 0; q < n; ++q)
            if ((i >> q) & 1ULL) sign *= signs[q];
        psi.amp[i] = scale * sign;
    }
    return psi;
}

Statevector product_bloch_state(const std::vector<Vec3>& bloch) {
    const int n = static_cast<int>(bloch.size());
    check_qubit_count(n);
    std::vector<cplx> c0(n), c1(n);
    for (int q = 0; q < n; ++q) {
        const auto& m = bloch[q];
        const double len = std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        if (std::abs(len - 1.0) > 1e-9)
            throw std::invalid_argument("Bloch vectors must be unit length");
        const double cos_half = std::sqrt(std::max(0.0, (1.0 + m[2]) / 2.0));
        c0[q] = cos_half;
        if (cos_half > 1e-12) {
            c1[q] = cplx(m[0], m[1]) / (2.0 * cos_half);
        } else {
            c1[q] = 1.0;  // south pole, phase immaterial
        }
    }
    Statevector psi;
    psi.n = n;
    psi.amp.resize(1ULL << n);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        cplx v = 1.0;
        for (int q = 0; q < n; ++q) v *= ((i >> q) & 1ULL) ? c1[q] : c0[q];
        psi.amp[i] = v;
    }
    return psi;
}

double norm(const Statevector& psi) {
    const cplx* a = psi.amp.data();
    const double n2 = chunked_sum<double>(psi.dim(), [a](std::size_t i) { return std::norm(a[i]); });
    return std::sqrt(n2);
}

cplx inner(const Statevector& a, const Statevector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    const cplx* pa = a.amp.data();
    const cplx* pb = b.amp.data();
    return chunked_sum<cplx>(a.dim(), [pa, pb](std::size_t i) { return std::conj(pa[i]) * pb[i]; });
}

double fidelity(const Statevector& psi, const Statevector& target) {
    return std::norm(inner(target, psi));
}

double fidelity(const Statevector& psi, const std::vector<Statevector>& basis) {
    double f = 0.0;
    for (const auto& b : basis) f += std::norm(inner(b, psi));
    return f;
}

std::vector<double> zz_phase_table(const InteractionGraph& g) {
    std::vector<double> table(1ULL << g.n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(table.size()); ++i) {
        double acc = 0.0;
        for (const auto& e : g.edges) {
            const bool same = (((i >> e.u) ^ (i >> e.v)) & 1LL) == 0;
            acc += same ? e.w : -e.w;
        }
        table[static_cast<std::size_t>(i)] = acc;
    }
    return table;
}

void apply_zz_phase(Statevector& psi, const InteractionGraph& g, double angle) {
    if (g.n != psi.n) throw std::invalid_argument("graph/state size mismatch");
    cplx* a = psi.amp.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i) {
        double acc = 0.0;
        for (const auto& e : g.edges) {
            const bool same = (((i >> e.u) ^ (i >> e.v)) & 1LL) == 0;
            acc += same ? e.w : -e.w;
        }
        a[i] *= std::polar(1.0, -angle * acc);
    }
}

void apply_zz_phase(Statevector& psi, const std::vector<double>& table, double angle) {
    if (table.size() != psi.dim()) throw std::invalid_argument("table/state size mismatch");
    cplx* a = psi.amp.data();
    const double* t = table.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i)
        a[i] *= std::polar(1.0, -angle * t[i]);
}

void apply_sum_x(Statevector& psi, double angle) {
    const cplx c{std::cos(angle), 0.0};
    const cplx s{0.0, -std::sin(angle)};
    for (int q = 0; q < psi.n; ++q) single_qubit_kernel(psi, q, c, s, s, c);
}

void apply_sum_z(Statevector& psi, double angle) {
    // Phase depends only on the number of down spins.
    std::vector<cplx> phase(psi.n + 1);
    for (int k = 0; k <= psi.n; ++k)
        phase[k] = std::polar(1.0, -angle * (psi.n - 2 * k));
    cplx* a = psi.amp.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long i = 0; i < static_cast<long long>(psi.dim()); ++i)
        a[i] *= phase[__builtin_popcountll(static_cast<unsigned long long>(i))];
}

void apply_sum_sx(Statevector& psi, const SignString& signs, double angle) {
    if (static_cast<int>(signs.size()) != psi.n)
        throw std::invalid_argument("sign/state size mismatch");
    for (int q = 0; q < psi.n; ++q) {
        const double t = signs[q] * angle;
        const cplx c{std::cos(t), 0.0};
        const cplx s{0.0, -std::sin(t)};
        single_qubit_kernel(psi, q, c, s, s, c);
    }
}

void apply_sum_axis(Statevector& psi, const std::vector<Vec3>& axes, double angle) {
    if (static_cast<int>(axes.size()) != psi.n)
        throw std::invalid_argument("axis/state size mismatch");
    const double c = std::cos(angle), s = std::sin(angle);
    for (int q = 0; q < psi.n; ++q) {
        const auto& v = axes[q];
        const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (std::abs(len - 1.0) > 1e-9)
            throw std::invalid_argument("rotation axes must be unit length");
        // exp(-i t n.sigma) = cos(t) I - i sin(t) n.sigma
        const cplx m00{c, -s * v[2]};
        const cplx m01 = cplx{0.0, -s} * cplx{v[0], -v[1]};
        const cplx m10 = cplx{0.0, -s} * cplx{v[0], v[1]};
        const cplx m11{c, s * v[2]};
        single_qubit_kernel(psi, q, m00, m01, m10, m11);
    }
}

void apply_two_qubit(Statevector& psi, int u, int v, const std::array<cplx, 16>& gate) {
    if (u == v || u < 0 || v < 0 || u >= psi.n || v >= psi.n)
        throw std::invalid_argument("bad qubit pair");
    const std::uint64_t bu = 1ULL << u, bv = 1ULL << v;
    cplx* a = psi.amp.data();
    const std::uint64_t quarter = psi.dim() >> 2;
    const int qlo = std::min(u, v), qhi = std::max(u, v);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long h = 0; h < static_cast<long long>(quarter); ++h) {
        std::uint64_t base = with_cleared_bit(static_cast<std::uint64_t>(h), qlo);
        base = with_cleared_bit(base, qhi);
        const std::uint64_t i00 = base;
        const std::uint64_t i01 = base | bu;   // b_u = 1
        const std::uint64_t i10 = base | bv;   // b_v = 1
        const std::uint64_t i11 = base | bu | bv;
        const cplx a00 = a[i00], a01 = a[i01], a10 = a[i10], a11 = a[i11];
        a[i00] = gate[0] * a00 + gate[1] * a01 + gate[2] * a10 + gate[3] * a11;
        a[i01] = gate[4] * a00 + gate[5] * a01 + gate[6] * a10 + gate[7] * a11;
        a[i10] = gate[8] * a00 + gate[9] * a01 + gate[10] * a10 + gate[11] * a11;
        a[i11] = gate[12] * a00 + gate[13] * a01 + gate[14] * a10 + gate[15] * a11;
    }
}

PauliPair expect_pair(const Statevector& psi, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= psi.n || v >= psi.n)
        throw std::invalid_argument("bad qubit pair");
    const std::uint64_t mask = (1ULL << u) | (1ULL << v);
    const cplx* a = psi.amp.data();
    const PauliAcc acc = chunked_sum<PauliAcc>(psi.dim(), [a, mask, u, v](std::size_t i) {
        const double par = (((i >> u) ^ (i >> v)) & 1ULL) ? -1.0 : 1.0;
        const cplx cross = std::conj(a[i]) * a[i ^ mask];
        PauliAcc t;
        t.xx = cross;
        t.yy = -par * cross;
        t.zz = par * std::norm(a[i]);
        return t;
    });
    return {acc.xx.real(), acc.yy.real(), acc.zz};
}

double expect_z(const Statevector& psi, int v) {
    if (v < 0 || v >= psi.n) throw std::invalid_argument("bad qubit");
    const cplx* a = psi.amp.data();
    return chunked_sum<double>(psi.dim(), [a, v](std::size_t i) {
        return (((i >> v) & 1ULL) ? -1.0 : 1.0) * std::norm(a[i]);
    });
}

namespace serial {

namespace {
// Naive pair loop over the full index range, used as the reference against
// the compact-enumeration parallel kernel.
void rotate_qubit(Statevector& psi, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
    const std::uint64_t bit = 1ULL << q;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        if (i & bit) continue;
        const cplx a0 = psi.amp[i], a1 = psi.amp[i | bit];
        psi.amp[i] = m00 * a0 + m01 * a1;
        psi.amp[i | bit] = m10 * a0 + m11 * a1;
    }
}
}  // namespace

void apply_zz_phase(Statevector& psi, const InteractionGraph& g, double angle) {
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        double acc = 0.0;
        for (const auto& e : g.edges) {
            const bool same = (((i >> e.u) ^ (i >> e.v)) & 1ULL) == 0;
            acc += same ? e.w : -e.w;
        }
        psi.amp[i] *= std::polar(1.0, -angle * acc);
    }
}

void apply_sum_x(Statevector& psi, double angle) {
    const cplx c{std::cos(angle), 0.0};
    const cplx s{0.0, -std::sin(angle)};
    for (int q = 0; q < psi.n; ++q) rotate_qubit(psi, q, c, s, s, c);
}

void apply_sum_z(Statevector& psi, double angle) {
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        const int down = __builtin_popcountll(i);
        psi.amp[i] *= std::polar(1.0, -angle * (psi.n - 2 * down));
    }
}

void apply_sum_sx(Statevector& psi, const SignString& signs, double angle) {
    for (int q = 0; q < psi.n; ++q) {
        const double t = signs[q] * angle;
        const cplx c{std::cos(t), 0.0};
        const cplx s{0.0, -std::sin(t)};
        rotate_qubit(psi, q, c, s, s, c);
    }
}

void apply_sum_axis(Statevector& psi, const std::vector<Vec3>& axes, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    for (int q = 0; q < psi.n; ++q) {
        const auto& v = axes[q];
        const cplx m00{c, -s * v[2]};
        const cplx m01 = cplx{0.0, -s} * cplx{v[0], -v[1]};
        const cplx m10 = cplx{0.0, -s} * cplx{v[0], v[1]};
        const cplx m11{c, s * v[2]};
        rotate_qubit(psi, q, m00, m01, m10, m11);
    }
}

cplx inner(const Statevector& a, const Statevector& b) {
    cplx acc{};
    for (std::uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
    return acc;
}

PauliPair expect_pair(const Statevector& psi, int u, int v) {
    const std::uint64_t mask = (1ULL << u) | (1ULL << v);
    cplx xx{}, yy{};
    double zz = 0.0;
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        const double par = (((i >> u) ^ (i >> v)) & 1ULL) ? -1.0 : 1.0;
        const cplx cross = std::conj(psi.amp[i]) * psi.amp[i ^ mask];
        xx += cross;
        yy += -par * cross;
        zz += par * std::norm(psi.amp[i]);
    }
    return {xx.real(), yy.real(), zz};
}

}  // namespace serial

}  // namespace hamqaoa
