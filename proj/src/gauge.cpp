#include <cmath>
#include <stdexcept>

#include "hamqaoa/optimize.hpp"

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

// one conditional shift by the full span, not a modular reduction
double restrict_once(double x, double span) {
    if (x < -span / 2.0) return x + span;
    if (x > span / 2.0) return x - span;
    return x;
}

// valid only when d is even: a pi/2 coupling shift equals a global spin flip,
// which commutes through the drives at the cost of the beta and gamma moves below
void alpha_fix(ParamSchedule& th, int l) {
    if (std::abs(th.alpha[l]) > kPi / 4.0) {
        th.alpha[l] += th.alpha[l] > 0.0 ? -kHalfPi : kHalfPi;
        th.beta[l] = -th.beta[l];
        th.gamma[l] = restrict_once(th.gamma[l] - kHalfPi, kPi);
    }
}

}  // namespace

ParamSchedule gauge_fix(const ParamSchedule& theta, long d) {
    theta.validate();
    if (d < 1 || d > 1000000) throw std::invalid_argument("degree parameter outside 1..1000000");

    ParamSchedule th = theta;
    const int p = th.p();
    const bool even = (d % 2 == 0);

    // every angle is pi-periodic for integer couplings and unit-norm drive axes
    for (auto* block : {&th.alpha, &th.beta, &th.gamma, &th.delta})
        for (auto& x : *block) x = wrap_angle(x, kPi);

    if (th.alpha[0] < 0.0)
        for (auto* block : {&th.alpha, &th.beta, &th.gamma, &th.delta})
            for (auto& x : *block) x = -x;

    if (!even)
        for (auto& a : th.alpha) a = restrict_once(a, kHalfPi);

    for (int l = 0; l + 1 < p; ++l) {
        if (even) alpha_fix(th, l);

        if (th.beta[l] < 0.0) {
            th.beta[l] += kHalfPi;
            th.gamma[l] = -th.gamma[l];
            th.beta[l + 1] = restrict_once(th.beta[l + 1] - kHalfPi, kPi);
        }

        if (th.gamma[l] < 0.0) {
            th.gamma[l] += kHalfPi;
            th.delta[l] = -th.delta[l];
            if (even) {
                th.alpha[l + 1] = restrict_once(th.alpha[l + 1] - kHalfPi, kPi);
                alpha_fix(th, l + 1);
            } else {
                th.beta[l + 1] = -th.beta[l + 1];
                th.gamma[l + 1] = restrict_once(th.gamma[l + 1] - kHalfPi, kPi);
            }
        }

        if (th.delta[l] < 0.0) {
            th.delta[l] += kHalfPi;
            th.gamma[l + 1] = -th.gamma[l + 1];
            th.delta[l + 1] = restrict_once(th.delta[l + 1] - kHalfPi, kPi);
        }
    }
    return th;
}

}  // namespace hamqaoa
