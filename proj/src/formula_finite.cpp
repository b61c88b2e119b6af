#include "hamqaoa/formula_finite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "hamqaoa/parallel.hpp"

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidueTol = 1e-9;

using Mat2 = std::array<cplx, 4>;  // row-major; rows and columns indexed by bit

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 exp_ix(double t) {  // e^{i t X}
    const cplx c{std::cos(t), 0.0}, is{0.0, std::sin(t)};
    return {c, is, is, c};
}

Mat2 exp_iz(double t) {  // e^{i t Z}
    return {std::polar(1.0, t), cplx{}, cplx{}, std::polar(1.0, -t)};
}

Mat2 exp_iaxis(double t, const Vec3& n) {  // e^{i t n.sigma}
    const double c = std::cos(t), s = std::sin(t);
    return {cplx{c, s * n[2]}, cplx{s * n[1], s * n[0]}, cplx{-s * n[1], s * n[0]},
            cplx{c, -s * n[2]}};
}

const Mat2 kSigma[4] = {
    {cplx{1, 0}, cplx{}, cplx{}, cplx{1, 0}},    // I
    {cplx{}, cplx{1, 0}, cplx{1, 0}, cplx{}},    // X
    {cplx{}, cplx{0, -1}, cplx{0, 1}, cplx{}},   // Y
    {cplx{1, 0}, cplx{}, cplx{}, cplx{-1, 0}},   // Z
};

std::array<cplx, 2> bloch_coeffs(const Vec3& m) {
    // |m> = c0|0> + c1|1>, same convention as product_bloch_state
    const double c0 = std::sqrt(std::max(0.0, (1.0 + m[2]) / 2.0));
    if (c0 < 1e-12) return {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
    return {cplx{c0, 0.0}, cplx{m[0], m[1]} / (2.0 * c0)};
}

cplx ipow(cplx base, long e) {
    cplx r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

void check_depth(int p, int depth_limit) {
    if (p < 1 || p > depth_limit)
        throw std::invalid_argument("depth " + std::to_string(p) + " outside supported range 1.." +
                                    std::to_string(depth_limit));
}

double real_with_residue_check(cplx v, const char* what) {
    if (std::abs(v.imag()) > kResidueTol)
        throw std::logic_error(std::string(what) + " has imaginary residue " +
                               std::to_string(v.imag()));
    return v.real();
}

double correlation(const FBarTable& lhs, const FBarTable& rhs, const HTable& h,
                   const std::vector<double>& prof) {
    const std::size_t count = h.values.size();
    std::vector<cplx> u(count), v(count);
    for (std::size_t i = 0; i < count; ++i) {
        u[i] = lhs.values[i] * h.values[i];
        v[i] = rhs.values[i] * h.values[i];
    }
    phase_transform(v, prof);
    cplx acc{};
    for (std::size_t i = 0; i < count; ++i) acc += u[i] * v[i];
    return real_with_residue_check(acc, "pair expectation");
}

}  // namespace

const char* pauli_name(Pauli s) {
    switch (s) {
        case Pauli::I: return "I";
        case Pauli::X: return "X";
        case Pauli::Y: return "Y";
        case Pauli::Z: return "Z";
    }
    throw std::logic_error("unreachable Pauli label");
}

Pauli pauli_from_name(std::string_view name) {
    if (name == "I") return Pauli::I;
    if (name == "X") return Pauli::X;
    if (name == "Y") return Pauli::Y;
    if (name == "Z") return Pauli::Z;
    throw std::invalid_argument("unknown Pauli label '" + std::string(name) + "'");
}

FBarEvaluator::FBarEvaluator(const ParamSchedule& theta, const AnsatzDistribution& dist) {
    theta.validate();
    dist.validate();
    p_ = theta.p();
    if (p_ > 12) throw std::invalid_argument("chain evaluator supports depth 1..12");
    const auto& comps = dist.components();
    weights_.reserve(comps.size());
    coef_.reserve(2 * comps.size());
    layers_.reserve(static_cast<std::size_t>(4) * p_ * comps.size());
    for (const auto& c : comps) {
        weights_.push_back(c.weight);
        const auto bc = bloch_coeffs(c.m);
        coef_.push_back(bc[0]);
        coef_.push_back(bc[1]);
        for (int j = 0; j < p_; ++j) {
            const Mat2 e = mul(mul(exp_ix(theta.beta[j]), exp_iz(theta.gamma[j])),
                               exp_iaxis(theta.delta[j], c.n));
            for (int t = 0; t < 4; ++t) layers_.push_back(e[t]);
        }
    }
}

// <m|z_1> prod <z_j|E_j|z_{j+1}> <z_{p+1}|sigma|z_{-(p+1)}> prod <z_{-(j+1)}|E_j^+|z_{-j}> <z_{-1}|m>
std::array<cplx, 4> FBarEvaluator::operator()(std::uint32_t path) const {
    const auto bit = [path](int s) { return static_cast<int>((path >> s) & 1u); };
    const int p = p_;
    std::array<cplx, 4> acc{};
    for (std::size_t c = 0; c < weights_.size(); ++c) {
        const cplx* coef = &coef_[2 * c];
        const cplx* lay = &layers_[static_cast<std::size_t>(4) * p * c];
        cplx left = std::conj(coef[bit(0)]);
        for (int j = 1; j <= p; ++j) left *= lay[(j - 1) * 4 + bit(j - 1) * 2 + bit(j)];
        cplx right = coef[bit(2 * p + 1)];
        for (int j = 1; j <= p; ++j)
            right *= std::conj(lay[(j - 1) * 4 + bit(2 * p + 2 - j) * 2 + bit(2 * p + 1 - j)]);
        const cplx lr = weights_[c] * left * right;
        const int mid = bit(p) * 2 + bit(p + 1);
        for (int s = 0; s < 4; ++s) acc[s] += lr * kSigma[s][mid];
    }
    return acc;
}

cplx f_value(Pauli sigma, const Vec3& m, const Vec3& n, const ParamSchedule& theta,
             std::uint32_t path) {
    const FBarEvaluator eval(theta, AnsatzDistribution::fixed(m, n));
    if (path >= (std::uint32_t{1} << (2 * theta.p() + 2)))
        throw std::out_of_range("path outside the 2p+2 bit range");
    return eval(path)[static_cast<int>(sigma)];
}

std::array<FBarTable, 4> fbar_tables(const ParamSchedule& theta, const AnsatzDistribution& dist) {
    const FBarEvaluator eval(theta, dist);
    const int p = eval.depth();
    const std::size_t count = std::size_t{1} << (2 * p + 2);

    std::array<FBarTable, 4> tabs;
    for (int s = 0; s < 4; ++s)
        tabs[s] = FBarTable{p, static_cast<Pauli>(s), std::vector<cplx>(count)};

#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < static_cast<long>(count); ++idx) {
        const auto val = eval(static_cast<std::uint32_t>(idx));
        for (int s = 0; s < 4; ++s) tabs[s].values[idx] = val[s];
    }
    return tabs;
}

FBarTable fbar_table(Pauli sigma, const ParamSchedule& theta, const AnsatzDistribution& dist) {
    return std::move(fbar_tables(theta, dist)[static_cast<int>(sigma)]);
}

std::vector<double> phase_profile(const std::vector<double>& alpha) {
    const int p = static_cast<int>(alpha.size());
    if (p < 1) throw std::invalid_argument("phase profile needs p >= 1");
    std::vector<double> prof(2 * p + 2, 0.0);
    for (int j = 1; j <= p; ++j) {
        prof[j - 1] = alpha[j - 1];
        prof[2 * p + 2 - j] = -alpha[j - 1];
    }
    return prof;
}

void phase_transform(std::vector<cplx>& values, const std::vector<double>& profile) {
    const int nbits = static_cast<int>(profile.size());
    if (nbits < 1 || nbits > 30 || values.size() != (std::size_t{1} << nbits))
        throw std::invalid_argument("table size does not match profile length");
    const std::size_t half = values.size() / 2;
    for (int s = 0; s < nbits; ++s) {
        const cplx w = std::polar(1.0, profile[s]);
        const cplx wc = std::conj(w);
        const std::size_t bit = std::size_t{1} << s;
        const std::size_t low = bit - 1;
#pragma omp parallel for schedule(static)
        for (long h = 0; h < static_cast<long>(half); ++h) {
            const std::size_t i =
                ((static_cast<std::size_t>(h) & ~low) << 1) | (static_cast<std::size_t>(h) & low);
            const cplx g0 = values[i], g1 = values[i | bit];
            values[i] = w * g0 + wc * g1;
            values[i | bit] = wc * g0 + w * g1;
        }
    }
}

std::vector<cplx> phase_transform_reference(const std::vector<cplx>& values,
                                            const std::vector<double>& profile) {
    const int nbits = static_cast<int>(profile.size());
    if (nbits < 1 || nbits > 30 || values.size() != (std::size_t{1} << nbits))
        throw std::invalid_argument("table size does not match profile length");
    std::vector<cplx> out(values.size());
    for (std::size_t z = 0; z < values.size(); ++z) {
        cplx acc{};
        for (std::size_t x = 0; x < values.size(); ++x) {
            const std::size_t diff = x ^ z;
            double phase = 0.0;
            for (int s = 0; s < nbits; ++s)
                phase += ((diff >> s) & 1u) ? -profile[s] : profile[s];
            acc += std::polar(1.0, phase) * values[x];
        }
        out[z] = acc;
    }
    return out;
}

HTable h_iterate(const FBarTable& fbar_identity, const std::vector<double>& alpha, long d,
                 int level, int depth_limit) {
    const int p = fbar_identity.p;
    check_depth(p, depth_limit);
    if (level < 0) level = p;
    if (level > p) throw std::invalid_argument("recursion level exceeds depth");
    if (fbar_identity.sigma != Pauli::I)
        throw std::invalid_argument("recursion consumes the identity table");
    if (static_cast<int>(alpha.size()) != p)
        throw std::invalid_argument("alpha length does not match table depth");
    if (d < 1 || d > kFiniteDegreeLimit)
        throw std::invalid_argument("degree parameter outside 1..1000000");
    const std::size_t count = std::size_t{1} << (2 * p + 2);
    if (fbar_identity.values.size() != count)
        throw std::invalid_argument("identity table has wrong size");

    const auto prof = phase_profile(alpha);
    std::vector<cplx> h(count, cplx{1.0, 0.0});
    std::vector<cplx> g(count);
    for (int k = 1; k <= level; ++k) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(count); ++i)
            g[i] = h[i] * fbar_identity.values[i];
        phase_transform(g, prof);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(count); ++i) h[i] = ipow(g[i], d);
    }
    return HTable{p, level, d, std::move(h)};
}

HTable h_iterate_reference(const FBarTable& fbar_identity, const std::vector<double>& alpha,
                           long d, int level) {
    const int p = fbar_identity.p;
    check_depth(p, kFiniteDepthLimit);
    if (level < 0) level = p;
    if (level > p) throw std::invalid_argument("recursion level exceeds depth");
    if (d < 1 || d > kFiniteDegreeLimit)
        throw std::invalid_argument("degree parameter outside 1..1000000");
    const std::size_t count = std::size_t{1} << (2 * p + 2);
    const auto prof = phase_profile(alpha);
    std::vector<cplx> h(count, cplx{1.0, 0.0});
    for (int k = 1; k <= level; ++k) {
        std::vector<cplx> g(count);
        for (std::size_t i = 0; i < count; ++i) g[i] = h[i] * fbar_identity.values[i];
        g = phase_transform_reference(g, prof);
        for (std::size_t i = 0; i < count; ++i) h[i] = ipow(g[i], d);
    }
    return HTable{p, level, d, std::move(h)};
}

double edge_expectation(Pauli left, Pauli right, const ParamSchedule& theta, long d,
                        const AnsatzDistribution& dist, int depth_limit) {
    check_depth(theta.p(), depth_limit);
    const auto tabs = fbar_tables(theta, dist);
    const auto h = h_iterate(tabs[0], theta.alpha, d, -1, depth_limit);
    const auto prof = phase_profile(theta.alpha);
    return correlation(tabs[static_cast<int>(left)], tabs[static_cast<int>(right)], h, prof);
}

PairExpectations pair_expectations(const ParamSchedule& theta, long d,
                                   const AnsatzDistribution& dist, int depth_limit) {
    check_depth(theta.p(), depth_limit);
    const auto tabs = fbar_tables(theta, dist);
    const auto h = h_iterate(tabs[0], theta.alpha, d, -1, depth_limit);
    const auto prof = phase_profile(theta.alpha);
    PairExpectations out;
    out.xx = correlation(tabs[1], tabs[1], h, prof);
    out.yy = correlation(tabs[2], tabs[2], h, prof);
    out.zz = correlation(tabs[3], tabs[3], h, prof);
    return out;
}

double objective_energy(const EdgeObservable& obs, const ParamSchedule& theta, long d,
                        const AnsatzDistribution& dist, int depth_limit) {
    check_depth(theta.p(), depth_limit);
    const auto tabs = fbar_tables(theta, dist);
    const auto h = h_iterate(tabs[0], theta.alpha, d, -1, depth_limit);
    const auto prof = phase_profile(theta.alpha);
    double e = obs.c_i;
    if (obs.c_xx != 0.0) e += obs.c_xx * correlation(tabs[1], tabs[1], h, prof);
    if (obs.c_yy != 0.0) e += obs.c_yy * correlation(tabs[2], tabs[2], h, prof);
    if (obs.c_zz != 0.0) e += obs.c_zz * correlation(tabs[3], tabs[3], h, prof);
    return e;
}

double assumption_residual(const ParamSchedule& theta, long d, int k) {
    theta.validate();
    const int p = theta.p();
    if (k < 0 || k > p) throw std::invalid_argument("level outside 0..p");
    for (double g : theta.gamma)
        if (std::abs(g) > 1e-12)
            throw std::invalid_argument("residual check requires gamma = 0");
    for (double b : theta.beta)
        if (std::abs(b - std::round(b / (kPi / 4)) * (kPi / 4)) > 1e-12)
            throw std::invalid_argument("residual check requires beta in multiples of pi/4");
    const auto tabs = fbar_tables(theta, AnsatzDistribution::signed_x());
    const auto h = h_iterate(tabs[0], theta.alpha, d, k);
    cplx acc{};
    for (std::size_t i = 0; i < h.values.size(); ++i)
        acc += tabs[1].values[i] * h.values[i];
    return std::abs(acc);
}

}  // namespace hamqaoa
