#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

// Subprocess tests for the command-line tool. HAMQAOA_CLI_PATH and
// HAMQAOA_DATA_DIR are injected by the build.

namespace {

using nlohmann::json;

struct CliResult {
    int status = -1;
    std::string text;
};

CliResult capture(const std::string& cmd) {
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.text.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// stdout and stderr interleaved, for error-path checks
CliResult run_cli(const std::string& args) {
    return capture(std::string(HAMQAOA_CLI_PATH) + " " + args + " 2>&1");
}

// stdout only
CliResult run_cli_stdout(const std::string& args) {
    return capture(std::string(HAMQAOA_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string data_file(const char* name) {
    return std::string(HAMQAOA_DATA_DIR) + "/" + name;
}

std::string temp_file(const char* stem, const std::string& content) {
    const std::string path = std::string("/tmp/hamqaoa_cli_test_") + stem + ".json";
    std::ofstream out(path);
    out << content;
    REQUIRE(out.good());
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_output(const CliResult& r) {
    REQUIRE(r.status == 0);
    return json::parse(r.text);
}

}  // namespace

TEST_CASE("gen-graph emits every family as json") {
    const json ring = parse_output(run_cli_stdout("gen-graph --type ring --n 4"));
    CHECK(ring["n"] == 4);
    REQUIRE(ring["edges"].size() == 4);
    CHECK(ring["edges"][0] == json::array({0, 1}));
    CHECK(ring["edges"][3] == json::array({3, 0}));

    CHECK(parse_output(run_cli_stdout("gen-graph --type path --n 5"))["edges"].size() == 4);
    CHECK(parse_output(run_cli_stdout("gen-graph --type complete --n 5"))["edges"].size() == 10);

    const json heawood = parse_output(run_cli_stdout("gen-graph --type heawood"));
    CHECK(heawood["n"] == 14);
    CHECK(heawood["edges"].size() == 21);

    const json rr = parse_output(
        run_cli_stdout("gen-graph --type random-regular --n 6 --degree 3 --seed 9"));
    CHECK(rr["n"] == 6);
    CHECK(rr["edges"].size() == 9);

    const json er = parse_output(run_cli_stdout("gen-graph --type erdos-renyi --n 8 --prob 0.4 --seed 4"));
    CHECK(er["n"] == 8);
    for (const auto& e : er["edges"]) {
        REQUIRE(e.size() == 2);
        CHECK(e[0].get<int>() < e[1].get<int>());
    }

    // random families are reproducible from the seed
    const CliResult a = run_cli_stdout("gen-graph --type random-regular --n 10 --degree 3 --seed 5");
    const CliResult b = run_cli_stdout("gen-graph --type random-regular --n 10 --degree 3 --seed 5");
    CHECK(a.text == b.text);
    CHECK(a.text.back() == '\n');
}

TEST_CASE("maxcut finds the alternating ring cut") {
    const json exact = parse_output(
        run_cli_stdout("maxcut --graph " + data_file("ring4.json")));
    CHECK(exact["value"] == 4.0);
    CHECK(exact["signs"] == json::array({1, -1, 1, -1}));

    const json local = parse_output(run_cli_stdout(
        "maxcut --graph " + data_file("ring4.json") + " --policy local-search --restarts 8 --seed 3"));
    CHECK(local["value"] == 4.0);

    const json random = parse_output(run_cli_stdout(
        "maxcut --graph " + data_file("ring4.json") + " --policy random --seed 1"));
    CHECK(random["signs"].size() == 4);
    CHECK(random["value"].get<double>() <= 4.0);
}

TEST_CASE("exact reports extremal eigenvalues") {
    const json top = parse_output(run_cli_stdout("exact --graph " + data_file("ring4.json")));
    CHECK(top["lambda_max"].get<double>() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(top["n"] == 4);
    CHECK(top["spec"] == "qmc");

    const json bottom = parse_output(run_cli_stdout(
        "exact --graph " + data_file("ring4.json") + " --extremum min --eigen-method dense"));
    CHECK(bottom.contains("lambda_min"));
    CHECK(bottom["lambda_min"].get<double>() < top["lambda_max"].get<double>());
}

TEST_CASE("simulate reproduces the stored ring-4 schedule") {
    const std::string base = "simulate --graph " + data_file("ring4.json") + " --signs " +
                             data_file("alt4.json") + " --params " + data_file("table1_n4.json");

    const json plain = parse_output(run_cli_stdout(base));
    CHECK(plain["energy"].get<double>() == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(plain["norm_residual"].get<double>() < 1e-12);
    CHECK(!plain.contains("fidelity"));

    const json with_fid = parse_output(run_cli_stdout(base + " --fidelity"));
    CHECK(with_fid["fidelity"].get<double>() >= 0.9999);
}

TEST_CASE("optimize covers the three strategies") {
    // random restarts on the 4-ring reach the depth-1 optimum 3 + sqrt(5)
    const json rnd = parse_output(run_cli_stdout(
        "optimize --objective statevector --strategy random --p 1 --restarts 3 --seed 2 --graph " +
        data_file("ring4.json") + " --signs " + data_file("alt4.json")));
    CHECK(rnd["strategy"] == "random");
    CHECK(rnd["seed"] == 2);
    REQUIRE(rnd["levels"].size() == 1);
    CHECK(rnd["levels"][0]["p"] == 1);
    CHECK(rnd["levels"][0]["evals"] == rnd["total_evals"]);
    CHECK(rnd["levels"][0]["value"].get<double>() ==
          doctest::Approx(-5.23606797749979).epsilon(1e-9));
    CHECK(rnd["levels"][0]["params"]["alpha"].size() == 1);

    // greedy incremental growth on the chain surrogate hits the known plateaus
    const json gi = parse_output(run_cli_stdout(
        "optimize --objective formula-finite --strategy gi --p 2 --restarts 3 --seed 3 --d 1"));
    CHECK(gi["strategy"] == "gi");
    REQUIRE(gi["levels"].size() == 2);
    CHECK(gi["levels"][0]["p"] == 1);
    CHECK(gi["levels"][1]["p"] == 2);
    CHECK(gi["levels"][0]["value"].get<double>() == doctest::Approx(-0.75).epsilon(1e-8));
    CHECK(gi["levels"][1]["value"].get<double>() ==
          doctest::Approx(-5.0 / 6.0).epsilon(1e-8));

    // the rescaled large-degree objective with quarter-turn mixers
    const json inf = parse_output(run_cli_stdout(
        "optimize --objective formula-infinite --strategy random --p 2 --restarts 5 --seed 1 "
        "--beta-pattern 1,1"));
    CHECK(inf["levels"][0]["value"].get<double>() ==
          doctest::Approx(-0.44588482136938479).epsilon(1e-9));

    // formula seeding plus graph polish reports both traces
    const json ifp = parse_output(run_cli_stdout(
        "optimize --objective statevector --strategy ifp --p 2 --formula-restarts 3 --seed 1 "
        "--graph " + data_file("ring4.json") + " --signs " + data_file("alt4.json")));
    CHECK(ifp["strategy"] == "ifp");
    REQUIRE(ifp["formula_levels"].size() == 2);
    REQUIRE(ifp["levels"].size() == 1);
    CHECK(ifp["levels"][0]["p"] == 2);
    CHECK(ifp["levels"][0]["value"].get<double>() <= -5.8);
    long evals = ifp["levels"][0]["evals"].get<long>();
    for (const auto& l : ifp["formula_levels"]) evals += l["evals"].get<long>();
    CHECK(ifp["total_evals"] == evals);
}

TEST_CASE("formula subcommands emit edge energies") {
    const std::string params = temp_file(
        "p1", R"({"alpha":[0.3],"beta":[0.4],"gamma":[0.5],"delta":[0.6]})");

    const json chain = parse_output(run_cli_stdout(
        "formula-finite --p 1 --d 1 --params " + params));
    CHECK(chain["edge_energy"].get<double>() ==
          doctest::Approx(0.20546512212124568).epsilon(1e-12));
    CHECK(chain["expectations"]["ZZ"].get<double>() ==
          doctest::Approx(0.5015487677722713).epsilon(1e-12));

    const json coupled = parse_output(run_cli_stdout(
        "formula-finite --p 1 --d 3 --coeffs xy --dist pointset:" +
        data_file("pointset_xy4.json") + " --params " + params));
    CHECK(coupled["edge_energy"].get<double>() ==
          doctest::Approx(0.09135929087381088).epsilon(1e-12));

    const std::string rescaled = temp_file(
        "rescaled", R"({"alpha_tilde":[0.6065],"beta":[0.7853981633974483],"delta":[0.6]})");
    const json limit = parse_output(run_cli_stdout("formula-infinite --params " + rescaled));
    CHECK(limit["nu_yy"].get<double>() ==
          doctest::Approx(-0.19630382731374996).epsilon(1e-12));
    CHECK(std::abs(limit["nu_zz"].get<double>()) < 1e-15);
    CHECK(limit["objective"].get<double>() ==
          limit["nu_yy"].get<double>() + limit["nu_zz"].get<double>());
}

TEST_CASE("gauge-fix canonicalizes and is idempotent") {
    const std::string params = temp_file(
        "gauge", R"({"alpha":[0.2,0.3],"beta":[-0.3,0.4],"gamma":[-0.5,0.6],"delta":[0.7,0.8]})");

    const CliResult once = run_cli_stdout("gauge-fix --params " + params + " --d 1");
    const json canon = parse_output(once);
    CHECK(canon["beta"][0].get<double>() == doctest::Approx(1.2707963267948965).epsilon(1e-12));
    CHECK(canon["beta"][1].get<double>() == doctest::Approx(-1.1707963267948966).epsilon(1e-12));
    CHECK(canon["gamma"][0].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(canon["alpha"] == json::array({0.2, 0.3}));

    const std::string again = temp_file("gauge2", once.text);
    const CliResult twice = run_cli_stdout("gauge-fix --params " + again + " --d 1");
    CHECK(twice.text == once.text);
}

TEST_CASE("agm reports the grid optimum") {
    const json r = parse_output(run_cli_stdout(
        "agm --graph " + data_file("ring4.json") + " --signs " + data_file("alt4.json")));
    CHECK(r["theta"].get<double>() == doctest::Approx(-0.2767871732545276).epsilon(1e-10));
    CHECK(r["energy"].get<double>() == doctest::Approx(5.236067977499789).epsilon(1e-12));
}

TEST_CASE("bench writes csv and a manifest") {
    const std::string manifest_path = "/tmp/hamqaoa_cli_test_manifest.json";
    const CliResult csv = run_cli_stdout("bench --suite fig2 --seed 7 --manifest " + manifest_path);
    REQUIRE(csv.status == 0);

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < csv.text.size()) {
        const std::size_t nl = csv.text.find('\n', pos);
        REQUIRE(nl != std::string::npos);
        lines.push_back(csv.text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 13);
    CHECK(lines[0] == "series,x,y,yerr,n,seed");

    bool saw_p1_limit = false, saw_p2_limit = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        const std::size_t c3 = line.find(',', c2 + 1);
        const std::string series = line.substr(0, c1);
        const double y = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
        if (series == "p1-limit") {
            CHECK(y == doctest::Approx(0.30326532985631682).epsilon(1e-12));
            saw_p1_limit = true;
        }
        if (series == "p2-limit") {
            CHECK(y == doctest::Approx(0.44588482136938479).epsilon(1e-12));
            saw_p2_limit = true;
        }
    }
    CHECK(saw_p1_limit);
    CHECK(saw_p2_limit);

    const json manifest = json::parse(read_file(manifest_path));
    CHECK(manifest["master_seed"] == 7);
    CHECK(manifest["points"].size() == 12);
    CHECK(manifest["failures"].empty());

    // same seed, same bytes
    const CliResult rerun = run_cli_stdout("bench --suite fig2 --seed 7");
    CHECK(rerun.text == csv.text);
}

TEST_CASE("results can be redirected to a file") {
    const std::string out_path = "/tmp/hamqaoa_cli_test_out.json";
    std::remove(out_path.c_str());
    const CliResult r = run_cli_stdout(
        "exact --graph " + data_file("ring4.json") + " --out " + out_path);
    CHECK(r.status == 0);
    CHECK(r.text.empty());
    const json j = json::parse(read_file(out_path));
    CHECK(j["lambda_max"].get<double>() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("reruns with one worker are byte identical") {
    const std::string args =
        "--workers 1 optimize --objective statevector --strategy random --p 2 --restarts 4 "
        "--seed 7 --graph " + data_file("ring4.json") + " --signs " + data_file("alt4.json");
    const CliResult a = run_cli_stdout(args);
    const CliResult b = run_cli_stdout(args);
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    // wall_seconds is the one field allowed to vary between runs
    json ja = json::parse(a.text);
    json jb = json::parse(b.text);
    ja.erase("wall_seconds");
    jb.erase("wall_seconds");
    CHECK(ja == jb);
}

TEST_CASE("failures exit nonzero with a message") {
    const CliResult missing = run_cli("maxcut --graph /nonexistent.json");
    CHECK(missing.status == 1);
    CHECK(missing.text.find("error:") == 0);
    // the message goes to stderr, not stdout
    CHECK(run_cli_stdout("maxcut --graph /nonexistent.json").text.empty());

    const CliResult both = run_cli(
        "simulate --graph " + data_file("ring4.json") + " --ansatz x.json --signs y.json --params " +
        data_file("table1_n4.json"));
    CHECK(both.status == 1);
    CHECK(both.text.find("either --ansatz or --signs") != std::string::npos);

    CHECK(run_cli("exact").status != 0);  // missing required option
    CHECK(run_cli("bench --suite nope").status != 0);

    const CliResult ifp_bad = run_cli(
        "optimize --objective formula-finite --strategy ifp --p 1 --d 1");
    CHECK(ifp_bad.status == 1);
    CHECK(ifp_bad.text.find("ifp needs --objective statevector") != std::string::npos);

    const CliResult inf_bad = run_cli(
        "optimize --objective formula-infinite --strategy gi --p 1 --beta-pattern 1");
    CHECK(inf_bad.status == 1);
    CHECK(inf_bad.text.find("supports --strategy random only") != std::string::npos);

    const CliResult no_graph = run_cli(
        "optimize --objective statevector --strategy random --p 1 --signs " + data_file("alt4.json"));
    CHECK(no_graph.status == 1);
    CHECK(no_graph.text.find("--graph is required") != std::string::npos);

    const CliResult bad_dist = run_cli(
        "formula-finite --p 1 --d 1 --dist bogus --params " + data_file("table1_n4.json"));
    CHECK(bad_dist.status == 1);
    CHECK(bad_dist.text.find("--dist must be") != std::string::npos);
}
