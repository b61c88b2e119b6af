#include "hamqaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "hamqaoa/formula_infinite.hpp"

namespace hamqaoa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

struct FlatProblem {
    const Objective& obj;
    LocalConfig cfg;
    int dims = 0;
    std::vector<std::optional<double>> periods;
    std::vector<bool> frozen;
    long evals = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;

    FlatProblem(const Objective& o, const LocalConfig& c) : obj(o), cfg(c) {
        if (o.p < 1 || !o.value) throw std::invalid_argument("objective is not configured");
        dims = 4 * o.p;
        if (o.periods.empty())
            periods.assign(dims, std::optional<double>(kPi));
        else if (static_cast<int>(o.periods.size()) == dims)
            periods = o.periods;
        else
            throw std::invalid_argument("objective periods length must be 4p");
        if (o.frozen.empty())
            frozen.assign(dims, false);
        else if (static_cast<int>(o.frozen.size()) == dims)
            frozen = o.frozen;
        else
            throw std::invalid_argument("objective frozen mask length must be 4p");
    }

    double eval(const std::vector<double>& x) {
        ++evals;
        const double v = obj.value(ParamSchedule::from_flat(x));
        if (v < best_value) {
            best_value = v;
            best_x = x;
        }
        return v;
    }

    bool budget_left() const { return evals < cfg.max_evals; }

    LocalResult result(bool converged) const {
        return {ParamSchedule::from_flat(best_x), best_value, evals, converged};
    }
};

LocalResult run_nelder_mead(FlatProblem& pr, const std::vector<double>& x0) {
    std::vector<int> free;
    for (int i = 0; i < pr.dims; ++i)
        if (!pr.frozen[i]) free.push_back(i);
    const int nf = static_cast<int>(free.size());
    const double f0 = pr.eval(x0);
    if (nf == 0) return {ParamSchedule::from_flat(x0), f0, pr.evals, true};

    std::vector<std::vector<double>> pts(nf + 1, x0);
    std::vector<double> fv(nf + 1, f0);
    for (int i = 0; i < nf && pr.budget_left(); ++i) {
        pts[i + 1][free[i]] += pr.cfg.initial_step;
        fv[i + 1] = pr.eval(pts[i + 1]);
    }

    bool converged = false;
    while (pr.budget_left()) {
        std::vector<int> ord(nf + 1);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> p2(nf + 1);
            std::vector<double> f2(nf + 1);
            for (int i = 0; i <= nf; ++i) {
                p2[i] = std::move(pts[ord[i]]);
                f2[i] = fv[ord[i]];
            }
            pts = std::move(p2);
            fv = std::move(f2);
        }
        // keep every vertex in the chart centered at the best one so centroid
        // and reflection stay meaningful on periodic coordinates
        for (int i = 1; i <= nf; ++i)
            for (int c : free)
                if (pr.periods[c])
                    pts[i][c] = pts[0][c] + wrap_angle(pts[i][c] - pts[0][c], *pr.periods[c]);

        double diam = 0.0;
        for (int i = 1; i <= nf; ++i)
            for (int c : free) diam = std::max(diam, std::abs(pts[i][c] - pts[0][c]));
        if (diam < pr.cfg.simplex_tol) {
            converged = true;
            break;
        }

        std::vector<double> cen = x0;
        for (int c : free) {
            double s = 0.0;
            for (int i = 0; i < nf; ++i) s += pts[i][c];
            cen[c] = s / nf;
        }
        const auto blend = [&](double t) {
            std::vector<double> x = cen;
            for (int c : free) x[c] = cen[c] + t * (cen[c] - pts[nf][c]);
            return x;
        };

        const auto xr = blend(1.0);
        const double fr = pr.eval(xr);
        if (fr < fv[0]) {
            if (pr.budget_left()) {
                const auto xe = blend(2.0);
                const double fe = pr.eval(xe);
                if (fe < fr) {
                    pts[nf] = xe;
                    fv[nf] = fe;
                } else {
                    pts[nf] = xr;
                    fv[nf] = fr;
                }
            } else {
                pts[nf] = xr;
                fv[nf] = fr;
            }
        } else if (fr < fv[nf - 1]) {
            pts[nf] = xr;
            fv[nf] = fr;
        } else {
            const bool outside = fr < fv[nf];
            const auto xc = blend(outside ? 0.5 : -0.5);
            const double fc =
                pr.budget_left() ? pr.eval(xc) : std::numeric_limits<double>::infinity();
            if (fc < std::min(fr, fv[nf])) {
                pts[nf] = xc;
                fv[nf] = fc;
            } else {
                for (int i = 1; i <= nf && pr.budget_left(); ++i) {
                    for (int c : free) pts[i][c] = pts[0][c] + 0.5 * (pts[i][c] - pts[0][c]);
                    fv[i] = pr.eval(pts[i]);
                }
            }
        }
    }
    return pr.result(converged);
}

std::vector<double> gradient_of(FlatProblem& pr, const std::vector<double>& x) {
    std::vector<double> g(pr.dims, 0.0);
    if (pr.obj.gradient) {
        ++pr.evals;
        g = pr.obj.gradient(ParamSchedule::from_flat(x));
        if (static_cast<int>(g.size()) != pr.dims)
            throw std::logic_error("objective gradient has wrong length");
    } else {
        for (int c = 0; c < pr.dims; ++c) {
            if (pr.frozen[c]) continue;
            const double h = 1e-6 * (1.0 + std::abs(x[c]));
            auto xp = x, xm = x;
            xp[c] += h;
            xm[c] -= h;
            g[c] = (pr.eval(xp) - pr.eval(xm)) / (2.0 * h);
        }
    }
    for (int c = 0; c < pr.dims; ++c)
        if (pr.frozen[c]) g[c] = 0.0;
    return g;
}

LocalResult run_lbfgs(FlatProblem& pr, std::vector<double> x) {
    constexpr int kMemory = 10;
    std::vector<std::vector<double>> hs, hy;
    std::vector<double> hrho;

    double f = pr.eval(x);
    auto g = gradient_of(pr, x);
    bool converged = false;
    while (pr.budget_left()) {
        double gmax = 0.0;
        for (int c = 0; c < pr.dims; ++c) gmax = std::max(gmax, std::abs(g[c]));
        if (gmax < pr.cfg.grad_tol) {
            converged = true;
            break;
        }

        std::vector<double> d = g;
        std::vector<double> a(hs.size());
        for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) {
            a[i] = hrho[i] * dot(hs[i], d);
            axpy(d, -a[i], hy[i]);
        }
        if (!hs.empty()) {
            const double scale = dot(hs.back(), hy.back()) / std::max(dot(hy.back(), hy.back()), 1e-300);
            for (auto& v : d) v *= scale;
        }
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const double b = hrho[i] * dot(hy[i], d);
            axpy(d, a[i] - b, hs[i]);
        }
        for (auto& v : d) v = -v;
        double gd = dot(g, d);
        if (!(gd < 0.0)) {
            for (int c = 0; c < pr.dims; ++c) d[c] = -g[c];
            gd = dot(g, d);
            if (!(gd < 0.0)) break;
        }

        double t = 1.0;
        bool accepted = false;
        double fn = f;
        std::vector<double> xn;
        for (int bt = 0; bt < 50 && pr.budget_left(); ++bt) {
            xn = x;
            axpy(xn, t, d);
            fn = pr.eval(xn);
            if (fn <= f + 1e-4 * t * gd) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;

        auto gn = gradient_of(pr, xn);
        std::vector<double> s(pr.dims), y(pr.dims);
        for (int c = 0; c < pr.dims; ++c) {
            s[c] = xn[c] - x[c];
            y[c] = gn[c] - g[c];
        }
        const double sy = dot(s, y);
        if (sy > 1e-12) {
            hs.push_back(std::move(s));
            hy.push_back(std::move(y));
            hrho.push_back(1.0 / sy);
            if (static_cast<int>(hs.size()) > kMemory) {
                hs.erase(hs.begin());
                hy.erase(hy.begin());
                hrho.erase(hrho.begin());
            }
        }
        x = std::move(xn);
        f = fn;
        g = std::move(gn);
    }
    return pr.result(converged);
}

}  // namespace

double wrap_angle(double x, double period) {
    if (!(period > 0.0)) throw std::invalid_argument("wrap period must be positive");
    double y = std::remainder(x, period);
    if (y <= -period / 2.0) y += period;
    return y;
}

LocalResult minimize_local(const Objective& obj, const ParamSchedule& init,
                           const LocalConfig& config) {
    init.validate();
    if (init.p() != obj.p)
        throw std::invalid_argument("initialization depth does not match objective depth");
    FlatProblem pr(obj, config);
    const auto x0 = init.flat();
    if (config.method == LocalMethod::nelder_mead) return run_nelder_mead(pr, x0);
    return run_lbfgs(pr, x0);
}

Objective graph_energy_objective(const InteractionGraph& g, const HamiltonianSpec& spec,
                                 const AnsatzSpec& ansatz, int p, bool negate) {
    if (p < 1) throw std::invalid_argument("objective needs p >= 1");
    validate_ansatz(g, ansatz);
    auto ctx = std::make_shared<CircuitContext>(g);
    auto sp = std::make_shared<HamiltonianSpec>(spec);
    auto an = std::make_shared<AnsatzSpec>(ansatz);
    const double sign = negate ? -1.0 : 1.0;

    Objective obj;
    obj.p = p;
    obj.value = [ctx, sp, an, sign](const ParamSchedule& th) {
        return sign * energy(*sp, prepare_hqs(*ctx, *an, th));
    };
    obj.gradient = [ctx, sp, an, sign](const ParamSchedule& th) {
        auto gr = energy_gradient(*ctx, *an, th, *sp);
        for (auto& v : gr) v *= sign;
        return gr;
    };
    bool integral = true;
    for (const auto& e : g.edges)
        if (std::abs(e.w - std::round(e.w)) > 1e-12) integral = false;
    obj.periods.assign(4 * p, std::optional<double>(kPi));
    if (!integral)
        for (int i = 0; i < p; ++i) obj.periods[i] = std::nullopt;
    obj.frozen.assign(4 * p, false);
    obj.anchor = ParamSchedule::zeros(p);
    obj.metadata = "graph-energy n=" + std::to_string(g.n) + (negate ? " negated" : "");
    return obj;
}

Objective formula_energy_objective(const EdgeObservable& obs, int p, long d,
                                   const AnsatzDistribution& dist, bool negate) {
    if (p < 1 || p > kFiniteDepthLimit)
        throw std::invalid_argument("formula objective depth outside supported range");
    if (d < 1 || d > kFiniteDegreeLimit)
        throw std::invalid_argument("degree parameter outside 1..1000000");
    dist.validate();
    auto dc = std::make_shared<AnsatzDistribution>(dist);
    const double sign = negate ? -1.0 : 1.0;

    Objective obj;
    obj.p = p;
    obj.value = [obs, d, dc, sign](const ParamSchedule& th) {
        return sign * objective_energy(obs, th, d, *dc);
    };
    obj.periods.assign(4 * p, std::optional<double>(kPi));
    obj.frozen.assign(4 * p, false);
    obj.anchor = ParamSchedule::zeros(p);
    obj.metadata = "formula-finite d=" + std::to_string(d) + (negate ? " negated" : "");
    return obj;
}

Objective infinite_limit_objective(const std::vector<double>& beta_pattern, int p) {
    if (static_cast<int>(beta_pattern.size()) != p)
        throw std::invalid_argument("beta pattern length must equal p");
    {
        RescaledParams probe;
        probe.alpha_tilde.assign(p, 0.0);
        probe.beta = beta_pattern;
        probe.delta.assign(p, 0.0);
        probe.validate();
    }

    Objective obj;
    obj.p = p;
    obj.value = [](const ParamSchedule& th) {
        RescaledParams r;
        r.alpha_tilde = th.alpha;
        r.beta = th.beta;
        r.delta = th.delta;
        return -heisenberg_objective(r);
    };
    obj.periods.assign(4 * p, std::optional<double>(kPi));
    for (int i = 0; i < p; ++i) obj.periods[i] = std::nullopt;  // alpha_tilde is unbounded
    obj.frozen.assign(4 * p, false);
    for (int i = p; i < 3 * p; ++i) obj.frozen[i] = true;  // beta pattern and gamma = 0
    obj.anchor = ParamSchedule::zeros(p);
    obj.anchor.beta = beta_pattern;
    obj.metadata = "rescaled-limit";
    return obj;
}

const DepthRecord& StrategyReport::best() const {
    if (levels.empty()) throw std::logic_error("strategy report has no levels");
    const DepthRecord* pick = &levels.front();
    for (const auto& r : levels)
        if (r.value < pick->value) pick = &r;
    return *pick;
}

}  // namespace hamqaoa
