#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamqaoa/experiments.hpp"
#include "hamqaoa/formula_finite.hpp"
#include "hamqaoa/formula_infinite.hpp"
#include "hamqaoa/graph.hpp"
#include "hamqaoa/hamiltonian.hpp"
#include "hamqaoa/io_json.hpp"
#include "hamqaoa/optimize.hpp"
#include "hamqaoa/parallel.hpp"
#include "hamqaoa/simulator.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace hamqaoa;

json params_json(const ParamSchedule& th) {
    return json{{"alpha", th.alpha},
                {"beta", th.beta},
                {"gamma", th.gamma},
                {"delta", th.delta}};
}

json levels_json(const std::vector<DepthRecord>& levels) {
    json arr = json::array();
    for (const auto& r : levels)
        arr.push_back({{"p", r.p},
                       {"value", r.value},
                       {"evals", r.evals},
                       {"params", params_json(r.params)}});
    return arr;
}

json report_json(const StrategyReport& rep) {
    json j{{"strategy", rep.strategy},
           {"seed", rep.seed},
           {"total_evals", rep.total_evals},
           {"wall_seconds", rep.wall_seconds},
           {"levels", levels_json(rep.levels)}};
    if (!rep.formula_levels.empty()) j["formula_levels"] = levels_json(rep.formula_levels);
    return j;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file(out_path, text);
}

HamiltonianSpec spec_from_arg(const std::string& name, const InteractionGraph& g, double delta,
                              double h) {
    if (name.rfind("custom:", 0) == 0) {
        const json j = json::parse(io::read_file(name.substr(7)));
        const auto vec = [&](const char* f) { return j.at(f).get<std::vector<double>>(); };
        return HamiltonianSpec::custom(g, vec("cconst"), vec("cxx"), vec("cyy"), vec("czz"),
                                       vec("cz"));
    }
    return HamiltonianSpec::preset(spec_kind_from_string(name), g, delta, h);
}

AnsatzDistribution dist_from_arg(const std::string& arg) {
    if (arg == "signed-x") return AnsatzDistribution::signed_x();
    if (arg.rfind("pointset:", 0) == 0)
        return AnsatzDistribution::coupled(io::load_pointset(arg.substr(9)));
    throw std::runtime_error("--dist must be signed-x or pointset:<file>");
}

EdgeObservable coeffs_from_arg(const std::string& arg) {
    if (arg == "qmc") return EdgeObservable::qmc();
    if (arg == "xy") return EdgeObservable::xy();
    if (arg.rfind("custom:", 0) == 0) {
        const std::string rest = arg.substr(7);
        if (std::filesystem::exists(rest)) return io::parse_coeffs(io::read_file(rest));
        return io::parse_coeffs(rest);
    }
    throw std::runtime_error("--coeffs must be qmc, xy, or custom:<json>");
}

AnsatzSpec ansatz_from_args(const std::string& ansatz_path, const std::string& signs_path) {
    if (!ansatz_path.empty() && !signs_path.empty())
        throw std::runtime_error("give either --ansatz or --signs, not both");
    if (!ansatz_path.empty()) return io::load_ansatz(ansatz_path);
    if (!signs_path.empty()) return SimplifiedAnsatz{io::load_signs(signs_path)};
    throw std::runtime_error("an ansatz is required: --ansatz <file> or --signs <file>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HamQAOA toolkit: simulation, average-case formulas, optimization"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    app.add_option("--workers", workers, "Worker count for parallel loops (default: env/OpenMP)");

    std::string out_path;
    app.add_option("--out", out_path, "Write the result to this file instead of stdout")
        ->configurable(false);

    // gen-graph
    auto* gg = app.add_subcommand("gen-graph", "Generate a graph and print it as JSON");
    std::string gg_type = "ring";
    int gg_n = 6, gg_degree = 3;
    double gg_prob = 0.5;
    std::uint64_t gg_seed = 1;
    gg->add_option("--type", gg_type, "ring|path|complete|heawood|random-regular|erdos-renyi")
        ->check(CLI::IsMember(
            {"ring", "path", "complete", "heawood", "random-regular", "erdos-renyi"}));
    gg->add_option("--n", gg_n, "Vertex count");
    gg->add_option("--degree", gg_degree, "Degree for random-regular");
    gg->add_option("--prob", gg_prob, "Edge probability for erdos-renyi");
    gg->add_option("--seed", gg_seed, "Seed for the random families");

    // maxcut
    auto* mc = app.add_subcommand("maxcut", "Solve or approximate MaxCut, emit a sign string");
    std::string mc_graph, mc_policy = "exact";
    int mc_restarts = 64;
    std::uint64_t mc_seed = 1;
    mc->add_option("--graph", mc_graph, "Graph JSON file")->required();
    mc->add_option("--policy", mc_policy, "exact|local-search|random")
        ->check(CLI::IsMember({"exact", "local-search", "random"}));
    mc->add_option("--restarts", mc_restarts, "Restarts for local-search");
    mc->add_option("--seed", mc_seed, "Seed for local-search and random");

    // exact
    auto* ex = app.add_subcommand("exact", "Extremal eigenvalue by exact diagonalization");
    std::string ex_graph, ex_spec = "qmc", ex_extremum = "max", ex_method = "auto";
    double ex_delta = 0.5, ex_h = 0.5;
    ex->add_option("--graph", ex_graph, "Graph JSON file")->required();
    ex->add_option("--spec", ex_spec, "qmc|heisenberg_pauli|xy|xxz|custom:<file>");
    ex->add_option("--delta", ex_delta, "XXZ anisotropy");
    ex->add_option("--field", ex_h, "XXZ field strength");
    ex->add_option("--extremum", ex_extremum, "max|min")->check(CLI::IsMember({"max", "min"}));
    ex->add_option("--eigen-method", ex_method, "auto|dense|iterative")
        ->check(CLI::IsMember({"auto", "dense", "iterative"}));

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run the circuit and report the energy");
    std::string sim_graph, sim_ansatz, sim_signs, sim_params, sim_spec = "qmc";
    double sim_delta = 0.5, sim_h = 0.5;
    bool sim_fidelity = false;
    sim->add_option("--graph", sim_graph, "Graph JSON file")->required();
    sim->add_option("--ansatz", sim_ansatz, "Ansatz JSON file");
    sim->add_option("--signs", sim_signs, "Sign-string JSON file (simplified ansatz)");
    sim->add_option("--params", sim_params, "Parameter JSON file")->required();
    sim->add_option("--spec", sim_spec, "qmc|heisenberg_pauli|xy|xxz|custom:<file>");
    sim->add_option("--delta", sim_delta, "XXZ anisotropy");
    sim->add_option("--field", sim_h, "XXZ field strength");
    sim->add_flag("--fidelity", sim_fidelity,
                  "Also report fidelity with the extremal eigenspace (max for qmc, else min)");

    // optimize
    auto* op = app.add_subcommand("optimize", "Optimize circuit parameters");
    std::string op_objective, op_strategy = "random", op_graph, op_ansatz, op_signs;
    std::string op_spec = "qmc", op_dist = "signed-x", op_coeffs = "qmc", op_method = "simplex";
    std::string op_insert = "end", op_beta_pattern;
    int op_p = 1, op_restarts = 20, op_formula_restarts = 20;
    long op_d = 1, op_max_evals = 0;
    double op_delta = 0.5, op_h = 0.5;
    std::uint64_t op_seed = 1;
    op->add_option("--objective", op_objective, "statevector|formula-finite|formula-infinite")
        ->required()
        ->check(CLI::IsMember({"statevector", "formula-finite", "formula-infinite"}));
    op->add_option("--strategy", op_strategy, "random|gi|ifp")
        ->check(CLI::IsMember({"random", "gi", "ifp"}));
    op->add_option("--p", op_p, "Circuit depth")->required();
    op->add_option("--restarts", op_restarts, "Restarts (random) or level-1 samples (gi)");
    op->add_option("--seed", op_seed, "Master seed");
    op->add_option("--method", op_method, "simplex|lbfgs")
        ->check(CLI::IsMember({"simplex", "lbfgs"}));
    op->add_option("--max-evals", op_max_evals, "Evaluation budget per local run");
    op->add_option("--insert", op_insert, "gi insertion policy: end|all")
        ->check(CLI::IsMember({"end", "all"}));
    op->add_option("--graph", op_graph, "Graph JSON file (statevector, ifp)");
    op->add_option("--ansatz", op_ansatz, "Ansatz JSON file");
    op->add_option("--signs", op_signs, "Sign-string JSON file (simplified ansatz)");
    op->add_option("--spec", op_spec, "qmc|heisenberg_pauli|xy|xxz|custom:<file>");
    op->add_option("--delta", op_delta, "XXZ anisotropy");
    op->add_option("--field", op_h, "XXZ field strength");
    op->add_option("--d", op_d, "Degree parameter (formula-finite)");
    op->add_option("--dist", op_dist, "signed-x|pointset:<file>");
    op->add_option("--coeffs", op_coeffs, "qmc|xy|custom:<json> (formula-finite)");
    op->add_option("--beta-pattern", op_beta_pattern,
                   "Comma-separated quarter-turn multiples (formula-infinite)");
    op->add_option("--formula-restarts", op_formula_restarts, "Level-1 samples for ifp");

    // formula-finite
    auto* ff = app.add_subcommand("formula-finite", "Average-case edge energy at finite degree");
    std::string ff_params, ff_dist = "signed-x", ff_coeffs = "qmc";
    int ff_p = 1;
    long ff_d = 1;
    ff->add_option("--p", ff_p, "Circuit depth")->required();
    ff->add_option("--d", ff_d, "Degree parameter")->required();
    ff->add_option("--dist", ff_dist, "signed-x|pointset:<file>");
    ff->add_option("--coeffs", ff_coeffs, "qmc|xy|custom:<json>");
    ff->add_option("--params", ff_params, "Parameter JSON file")->required();

    // formula-infinite
    auto* fi = app.add_subcommand("formula-infinite", "Rescaled infinite-degree objective");
    std::string fi_params;
    fi->add_option("--params", fi_params, "Rescaled parameter JSON file")->required();

    // gauge-fix
    auto* gf = app.add_subcommand("gauge-fix", "Canonicalize parameters");
    std::string gf_params;
    long gf_d = 1;
    gf->add_option("--params", gf_params, "Parameter JSON file")->required();
    gf->add_option("--d", gf_d, "Degree parameter")->required();

    // agm
    auto* ag = app.add_subcommand("agm", "Single-angle product-rotation baseline");
    std::string ag_graph, ag_signs;
    double ag_step = 1e-3;
    ag->add_option("--graph", ag_graph, "Graph JSON file")->required();
    ag->add_option("--signs", ag_signs, "Sign-string JSON file")->required();
    ag->add_option("--grid-step", ag_step, "Angle grid resolution");

    // bench
    auto* be = app.add_subcommand("bench", "Desk-scale benchmark suites, CSV output");
    std::string be_suite, be_manifest;
    std::uint64_t be_seed = 1;
    be->add_option("--suite", be_suite, "fig2|fig3|fig4|fig5|fig6|fig7")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
    be->add_option("--seed", be_seed, "Master seed");
    be->add_option("--manifest", be_manifest, "Write the seed/size manifest to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (workers > 0) set_worker_count(workers);

        if (gg->parsed()) {
            InteractionGraph g;
            if (gg_type == "ring")
                g = ring_graph(gg_n);
            else if (gg_type == "path")
                g = path_graph(gg_n);
            else if (gg_type == "complete")
                g = complete_graph(gg_n);
            else if (gg_type == "heawood")
                g = heawood_graph();
            else if (gg_type == "random-regular")
                g = random_regular_graph(gg_n, gg_degree, gg_seed);
            else
                g = erdos_renyi_graph(gg_n, gg_prob, gg_seed);
            const std::string text = io::graph_to_json(g);
            if (out_path.empty())
                std::cout << text;
            else
                io::write_file(out_path, text);
            return 0;
        }

        if (mc->parsed()) {
            const InteractionGraph g = io::load_graph(mc_graph);
            CutResult r;
            if (mc_policy == "exact")
                r = max_cut_exact(g);
            else if (mc_policy == "local-search")
                r = max_cut_local_search(g, mc_restarts, mc_seed);
            else {
                r.signs = choose_signs(g, SignPolicy::random, mc_seed);
                r.value = cut_value(g, r.signs);
            }
            emit(json{{"value", r.value}, {"signs", r.signs}}, out_path);
            return 0;
        }

        if (ex->parsed()) {
            const InteractionGraph g = io::load_graph(ex_graph);
            const HamiltonianSpec spec = spec_from_arg(ex_spec, g, ex_delta, ex_h);
            const Extremum which = ex_extremum == "max" ? Extremum::max : Extremum::min;
            EigenMethod method = EigenMethod::automatic;
            if (ex_method == "dense") method = EigenMethod::dense;
            if (ex_method == "iterative") method = EigenMethod::iterative;
            const EigenPair pr = extremal_eigenpair(spec, which, method);
            const char* key = which == Extremum::max ? "lambda_max" : "lambda_min";
            emit(json{{key, pr.value}, {"n", g.n}, {"spec", to_string(spec.kind)}}, out_path);
            return 0;
        }

        if (sim->parsed()) {
            const InteractionGraph g = io::load_graph(sim_graph);
            const AnsatzSpec ans = ansatz_from_args(sim_ansatz, sim_signs);
            const ParamSchedule th = io::load_params(sim_params);
            const HamiltonianSpec spec = spec_from_arg(sim_spec, g, sim_delta, sim_h);
            const Statevector psi = prepare_hqs(g, ans, th);
            json j{{"energy", energy(spec, psi)},
                   {"norm_residual", std::abs(norm(psi) - 1.0)}};
            if (sim_fidelity) {
                const Extremum which =
                    spec.kind == SpecKind::qmc ? Extremum::max : Extremum::min;
                j["fidelity"] = fidelity(psi, extremal_eigenspace(spec, which).basis);
            }
            emit(j, out_path);
            return 0;
        }

        if (op->parsed()) {
            LocalConfig cfg;
            cfg.method = op_method == "lbfgs" ? LocalMethod::lbfgs : LocalMethod::nelder_mead;
            if (op_max_evals > 0) cfg.max_evals = op_max_evals;

            StrategyReport rep;
            if (op_strategy == "ifp") {
                if (op_objective != "statevector")
                    throw std::runtime_error("ifp needs --objective statevector");
                const InteractionGraph g = io::load_graph(op_graph);
                const HamiltonianSpec spec = spec_from_arg(op_spec, g, op_delta, op_h);
                const AnsatzSpec ans = ansatz_from_args(op_ansatz, op_signs);
                rep = strategy_ifp(g, spec, ans, op_p, dist_from_arg(op_dist), op_seed, cfg,
                                   op_formula_restarts, spec.kind == SpecKind::qmc);
            } else {
                ObjectiveFactory factory;
                if (op_objective == "statevector") {
                    if (op_graph.empty()) throw std::runtime_error("--graph is required");
                    const auto g = io::load_graph(op_graph);
                    const auto spec = spec_from_arg(op_spec, g, op_delta, op_h);
                    const AnsatzSpec ans = ansatz_from_args(op_ansatz, op_signs);
                    const bool negate = spec.kind == SpecKind::qmc;
                    factory = [g, spec, ans, negate](int p) {
                        return graph_energy_objective(g, spec, ans, p, negate);
                    };
                } else if (op_objective == "formula-finite") {
                    const EdgeObservable obs = coeffs_from_arg(op_coeffs);
                    const AnsatzDistribution dist = dist_from_arg(op_dist);
                    const long d = op_d;
                    const bool negate = op_coeffs == "qmc";
                    factory = [obs, d, dist, negate](int p) {
                        return formula_energy_objective(obs, p, d, dist, negate);
                    };
                } else {
                    if (op_strategy != "random")
                        throw std::runtime_error(
                            "formula-infinite supports --strategy random only");
                    std::vector<double> beta;
                    std::stringstream ss(op_beta_pattern);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        beta.push_back(std::stod(tok) * 3.14159265358979323846 / 4.0);
                    if (beta.empty()) throw std::runtime_error("--beta-pattern is required");
                    factory = [beta](int p) { return infinite_limit_objective(beta, p); };
                }
                if (op_strategy == "random")
                    rep = strategy_random(factory(op_p), op_restarts, op_seed, cfg);
                else
                    rep = strategy_gi(factory, op_p, op_restarts, op_seed, cfg,
                                      op_insert == "all" ? InsertPolicy::all_positions
                                                         : InsertPolicy::end);
            }
            emit(report_json(rep), out_path);
            return 0;
        }

        if (ff->parsed()) {
            const ParamSchedule th = io::load_params(ff_params);
            const AnsatzDistribution dist = dist_from_arg(ff_dist);
            const EdgeObservable obs = coeffs_from_arg(ff_coeffs);
            const PairExpectations pe = pair_expectations(th, ff_d, dist);
            emit(json{{"edge_energy", objective_energy(obs, th, ff_d, dist)},
                      {"expectations", {{"XX", pe.xx}, {"YY", pe.yy}, {"ZZ", pe.zz}}}},
                 out_path);
            return 0;
        }

        if (fi->parsed()) {
            const RescaledParams r = io::load_rescaled(fi_params);
            const double nu_yy = nu(r, Pauli::Y, Pauli::Y);
            const double nu_zz = nu(r, Pauli::Z, Pauli::Z);
            emit(json{{"nu_yy", nu_yy}, {"nu_zz", nu_zz}, {"objective", nu_yy + nu_zz}},
                 out_path);
            return 0;
        }

        if (gf->parsed()) {
            const ParamSchedule canon = gauge_fix(io::load_params(gf_params), gf_d);
            const std::string text = io::params_to_json(canon);
            if (out_path.empty())
                std::cout << text;
            else
                io::write_file(out_path, text);
            return 0;
        }

        if (ag->parsed()) {
            const InteractionGraph g = io::load_graph(ag_graph);
            const AgmResult r = agm_optimize(g, io::load_signs(ag_signs), ag_step);
            emit(json{{"theta", r.theta}, {"energy", r.energy}}, out_path);
            return 0;
        }

        if (be->parsed()) {
            const SuiteResult res = run_suite(be_suite, be_seed);
            const std::string csv = suite_csv(res);
            if (out_path.empty())
                std::cout << csv;
            else
                io::write_file(out_path, csv);
            if (!be_manifest.empty()) io::write_file(be_manifest, res.manifest_json);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
