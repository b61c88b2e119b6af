#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hamqaoa {

// One angle row per layer; layer j applies, in order,
//   exp(-i alpha_j sum_uv w Z_u Z_v), exp(-i beta_j sum_v X_v),
//   exp(-i gamma_j sum_v Z_v), exp(-i delta_j D)
// where D couples each vertex to its drive axis (s_v X_v in the simplified
// ansatz, n_v.sigma_v in the general one).
struct ParamSchedule {
    std::vector<double> alpha, beta, gamma, delta;

    int p() const { return static_cast<int>(alpha.size()); }

    static ParamSchedule zeros(int p) {
        if (p < 1) throw std::invalid_argument("schedule needs p >= 1");
        ParamSchedule s;
        s.alpha.assign(p, 0.0);
        s.beta.assign(p, 0.0);
        s.gamma.assign(p, 0.0);
        s.delta.assign(p, 0.0);
        return s;
    }

    void validate() const {
        const std::size_t p = alpha.size();
        if (p < 1) throw std::invalid_argument("schedule needs p >= 1");
        if (beta.size() != p || gamma.size() != p || delta.size() != p)
            throw std::invalid_argument("schedule rows must have equal length");
        for (const auto* arr : {&alpha, &beta, &gamma, &delta})
            for (double v : *arr)
                if (!std::isfinite(v)) throw std::invalid_argument("angles must be finite");
    }

    std::vector<double> flat() const {  // [alpha|beta|gamma|delta]
        std::vector<double> x;
        x.reserve(4 * alpha.size());
        for (const auto* arr : {&alpha, &beta, &gamma, &delta})
            x.insert(x.end(), arr->begin(), arr->end());
        return x;
    }

    static ParamSchedule from_flat(const std::vector<double>& x) {
        if (x.empty() || x.size() % 4 != 0)
            throw std::invalid_argument("flat schedule length must be a positive multiple of 4");
        const std::size_t p = x.size() / 4;
        ParamSchedule s;
        s.alpha.assign(x.begin(), x.begin() + p);
        s.beta.assign(x.begin() + p, x.begin() + 2 * p);
        s.gamma.assign(x.begin() + 2 * p, x.begin() + 3 * p);
        s.delta.assign(x.begin() + 3 * p, x.end());
        return s;
    }
};

}  // namespace hamqaoa
