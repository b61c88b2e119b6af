#include "doctest.h"

#include "hamqaoa/io_json.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "json.hpp"

using namespace hamqaoa;

namespace {

std::string temp_path(const char* stem) {
    return std::string("/tmp/hamqaoa_io_test_") + stem + ".json";
}

}  // namespace

TEST_CASE("graph json round trip") {
    InteractionGraph g = InteractionGraph::make(4, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, -2.0}});
    const std::string text = io::graph_to_json(g);
    const InteractionGraph back = io::parse_graph(text);

    CHECK(back.n == g.n);
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].u == g.edges[i].u);
        CHECK(back.edges[i].v == g.edges[i].v);
        CHECK(back.edges[i].w == g.edges[i].w);
    }

    // unit weights serialize as bare pairs, the rest carry the weight
    const auto j = nlohmann::json::parse(text);
    CHECK(j["edges"][0].size() == 2);
    CHECK(j["edges"][1].size() == 3);
    CHECK(j["edges"][2].size() == 3);

    // deterministic output: sorted keys, trailing newline, repeatable
    CHECK(text == io::graph_to_json(g));
    CHECK(text.back() == '\n');
    CHECK(text.find("\"edges\"") < text.find("\"n\""));

    // missing weight defaults to 1
    const InteractionGraph pair = io::parse_graph(R"({"n": 2, "edges": [[0, 1]]})");
    CHECK(pair.edges.at(0).w == 1.0);
}

TEST_CASE("graph json validation") {
    CHECK_THROWS_AS(io::parse_graph("not json"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"edges": []})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[0]]})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[0, 1, 2, 3]]})"), std::runtime_error);
    // structural validation comes from the graph constructor
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[0, 2]]})"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_graph(R"({"n": 2, "edges": [[0, 0]]})"), std::invalid_argument);
}

TEST_CASE("sign string json round trip") {
    const SignString s{1, -1, -1, 1};
    const std::string text = io::signs_to_json(s);
    CHECK(io::parse_signs(text) == s);
    CHECK(text == io::signs_to_json(s));

    CHECK_THROWS_AS(io::parse_signs(R"({"signs": [1, 0]})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_signs(R"({"signs": [1, 2]})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_signs(R"({"signs": [1.5]})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_signs(R"({"values": [1]})"), std::runtime_error);
}

TEST_CASE("schedule json round trip keeps every bit") {
    ParamSchedule th;
    th.alpha = {0.28209999999999991, 1e-17};
    th.beta = {-1.2707, 3.14159265358979312};
    th.gamma = {0.0630, -0.0};
    th.delta = {-0.6880, 0.1};
    const std::string text = io::params_to_json(th);
    const ParamSchedule back = io::parse_params(text);
    CHECK(back.alpha == th.alpha);
    CHECK(back.beta == th.beta);
    CHECK(back.gamma == th.gamma);
    CHECK(back.delta == th.delta);

    CHECK_THROWS_AS(io::parse_params(R"({"alpha": [1], "beta": [1], "gamma": [1]})"),
                    std::runtime_error);
    // ragged rows fail schedule validation
    CHECK_THROWS_AS(io::parse_params(
                        R"({"alpha": [1, 2], "beta": [1], "gamma": [1], "delta": [1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_params(R"({"alpha": [], "beta": [], "gamma": [], "delta": []})"),
                    std::invalid_argument);
}

TEST_CASE("rescaled schedule json round trip") {
    RescaledParams r;
    r.alpha_tilde = {0.60653065971263342, 0.25};
    r.beta = {0.78539816339744828, 0.0};
    r.delta = {0.4, -0.9};
    const std::string text = io::rescaled_to_json(r);
    const RescaledParams back = io::parse_rescaled(text);
    CHECK(back.alpha_tilde == r.alpha_tilde);
    CHECK(back.beta == r.beta);
    CHECK(back.delta == r.delta);
    CHECK(text == io::rescaled_to_json(r));

    // beta rows away from quarter-turn multiples fail validation
    CHECK_THROWS_AS(io::parse_rescaled(
                        R"({"alpha_tilde": [0.5], "beta": [0.3], "delta": [0.1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_rescaled(R"({"alpha_tilde": [0.5], "beta": [0.0]})"),
                    std::runtime_error);
}

TEST_CASE("pointset json round trip") {
    PointSet ps;
    ps.points.push_back({{1.0, 0.0, 0.0}, 0.5});
    ps.points.push_back({{0.0, 1.0, 0.0}, 0.25});
    ps.points.push_back({{0.0, -1.0, 0.0}, 0.25});
    const std::string text = io::pointset_to_json(ps);
    const PointSet back = io::parse_pointset(text);
    REQUIRE(back.points.size() == ps.points.size());
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
        CHECK(back.points[i].dir == ps.points[i].dir);
        CHECK(back.points[i].weight == ps.points[i].weight);
    }

    CHECK_THROWS_AS(io::parse_pointset(R"({"points": [[1, 0, 0]]})"), std::runtime_error);
    // weights that do not sum to one fail pointset validation
    CHECK_THROWS_AS(io::parse_pointset(R"({"points": [[1, 0, 0, 0.5]]})"), std::invalid_argument);
    // directions must be unit vectors
    CHECK_THROWS_AS(io::parse_pointset(R"({"points": [[2, 0, 0, 1.0]]})"), std::invalid_argument);
}

TEST_CASE("ansatz json round trip for both variants") {
    const AnsatzSpec simp = SimplifiedAnsatz{{1, -1, 1}};
    const std::string stext = io::ansatz_to_json(simp);
    const AnsatzSpec sback = io::parse_ansatz(stext);
    REQUIRE(std::holds_alternative<SimplifiedAnsatz>(sback));
    CHECK(std::get<SimplifiedAnsatz>(sback).signs == std::get<SimplifiedAnsatz>(simp).signs);

    GeneralAnsatz gen;
    gen.axes = {{1.0, 0.0, 0.0}, {0.0, 0.6, 0.8}};
    gen.states = {{0.0, 0.0, 1.0}, {0.6, 0.0, 0.8}};
    const std::string gtext = io::ansatz_to_json(gen);
    const AnsatzSpec gback = io::parse_ansatz(gtext);
    REQUIRE(std::holds_alternative<GeneralAnsatz>(gback));
    CHECK(std::get<GeneralAnsatz>(gback).axes == gen.axes);
    CHECK(std::get<GeneralAnsatz>(gback).states == gen.states);

    CHECK_THROWS_AS(io::parse_ansatz(R"({"variant": "other"})"), std::runtime_error);
    CHECK_THROWS_AS(io::parse_ansatz(R"({"signs": [1]})"), std::runtime_error);
    CHECK_THROWS_AS(
        io::parse_ansatz(R"({"variant": "general", "n": [[1, 0, 0]], "m": []})"),
        std::runtime_error);
    CHECK_THROWS_AS(io::parse_ansatz(R"({"variant": "simplified", "signs": [3]})"),
                    std::runtime_error);
}

TEST_CASE("edge coefficient parsing") {
    const EdgeObservable obs =
        io::parse_coeffs(R"({"i": 0.5, "xx": -0.5, "yy": -0.5, "zz": -0.5})");
    CHECK(obs.c_i == 0.5);
    CHECK(obs.c_xx == -0.5);
    CHECK(obs.c_yy == -0.5);
    CHECK(obs.c_zz == -0.5);
    CHECK_THROWS_AS(io::parse_coeffs(R"({"i": 0.5, "xx": 1, "yy": 1})"), std::runtime_error);
}

TEST_CASE("file io and loaders") {
    const std::string path = temp_path("graph");
    const InteractionGraph g = heawood_graph();
    io::write_file(path, io::graph_to_json(g));
    const InteractionGraph back = io::load_graph(path);
    CHECK(back.n == g.n);
    CHECK(back.edges.size() == g.edges.size());
    CHECK(io::read_file(path) == io::graph_to_json(g));
    std::remove(path.c_str());

    CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file.json"), std::runtime_error);
    CHECK_THROWS_AS(io::load_graph("/nonexistent/dir/file.json"), std::runtime_error);
    CHECK_THROWS_AS(io::write_file("/nonexistent/dir/file.json", "x"), std::runtime_error);
}
