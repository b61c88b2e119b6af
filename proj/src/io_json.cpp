#include "hamqaoa/io_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hamqaoa::io {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& j, const char* name, const char* what) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::runtime_error(std::string(what) + ": missing field \"" + name + "\"");
    return *it;
}

std::vector<double> number_list(const json& j, const char* name, const char* what) {
    const json& arr = field(j, name, what);
    if (!arr.is_array())
        throw std::runtime_error(std::string(what) + ": field \"" + name + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number())
            throw std::runtime_error(std::string(what) + ": field \"" + name +
                                     "\" must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<int> sign_list(const json& arr, const char* what) {
    if (!arr.is_array()) throw std::runtime_error(std::string(what) + ": signs must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw std::runtime_error(std::string(what) + ": signs must be integers");
        const int s = v.get<int>();
        if (s != 1 && s != -1)
            throw std::runtime_error(std::string(what) + ": signs must be +1 or -1");
        out.push_back(s);
    }
    return out;
}

std::vector<Vec3> vec3_list(const json& j, const char* name, const char* what) {
    const json& arr = field(j, name, what);
    if (!arr.is_array())
        throw std::runtime_error(std::string(what) + ": field \"" + name + "\" must be an array");
    std::vector<Vec3> out;
    out.reserve(arr.size());
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() ||
            !row[2].is_number())
            throw std::runtime_error(std::string(what) + ": field \"" + name +
                                     "\" must hold [x, y, z] triples");
        out.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

InteractionGraph parse_graph(const std::string& text) {
    const json j = parse_text(text, "graph");
    const json& nj = field(j, "n", "graph");
    if (!nj.is_number_integer()) throw std::runtime_error("graph: \"n\" must be an integer");
    const json& ej = field(j, "edges", "graph");
    if (!ej.is_array()) throw std::runtime_error("graph: \"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(ej.size());
    for (const auto& row : ej) {
        if (!row.is_array() || row.size() < 2 || row.size() > 3 ||
            !row[0].is_number_integer() || !row[1].is_number_integer() ||
            (row.size() == 3 && !row[2].is_number()))
            throw std::runtime_error("graph: edges must be [u, v] or [u, v, w]");
        Edge e;
        e.u = row[0].get<int>();
        e.v = row[1].get<int>();
        e.w = row.size() == 3 ? row[2].get<double>() : 1.0;
        edges.push_back(e);
    }
    return InteractionGraph::make(nj.get<int>(), std::move(edges));
}

InteractionGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string graph_to_json(const InteractionGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) {
        if (e.w == 1.0)
            edges.push_back({e.u, e.v});
        else
            edges.push_back({e.u, e.v, e.w});
    }
    return dump(json{{"n", g.n}, {"edges", edges}});
}

SignString parse_signs(const std::string& text) {
    const json j = parse_text(text, "signs");
    return sign_list(field(j, "signs", "signs"), "signs");
}

SignString load_signs(const std::string& path) { return parse_signs(read_file(path)); }

std::string signs_to_json(const SignString& s) { return dump(json{{"signs", s}}); }

ParamSchedule parse_params(const std::string& text) {
    const json j = parse_text(text, "params");
    ParamSchedule th;
    th.alpha = number_list(j, "alpha", "params");
    th.beta = number_list(j, "beta", "params");
    th.gamma = number_list(j, "gamma", "params");
    th.delta = number_list(j, "delta", "params");
    th.validate();
    return th;
}

ParamSchedule load_params(const std::string& path) { return parse_params(read_file(path)); }

std::string params_to_json(const ParamSchedule& th) {
    return dump(json{{"alpha", th.alpha}, {"beta", th.beta}, {"gamma", th.gamma},
                     {"delta", th.delta}});
}

RescaledParams parse_rescaled(const std::string& text) {
    const json j = parse_text(text, "rescaled params");
    RescaledParams r;
    r.alpha_tilde = number_list(j, "alpha_tilde", "rescaled params");
    r.beta = number_list(j, "beta", "rescaled params");
    r.delta = number_list(j, "delta", "rescaled params");
    r.validate();
    return r;
}

RescaledParams load_rescaled(const std::string& path) { return parse_rescaled(read_file(path)); }

std::string rescaled_to_json(const RescaledParams& r) {
    return dump(json{{"alpha_tilde", r.alpha_tilde}, {"beta", r.beta}, {"delta", r.delta}});
}

PointSet parse_pointset(const std::string& text) {
    const json j = parse_text(text, "pointset");
    const json& arr = field(j, "points", "pointset");
    if (!arr.is_array()) throw std::runtime_error("pointset: \"points\" must be an array");
    PointSet ps;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 4 || !row[0].is_number() || !row[1].is_number() ||
            !row[2].is_number() || !row[3].is_number())
            throw std::runtime_error("pointset: points must be [x, y, z, w] rows");
        WeightedDirection wd;
        wd.dir = {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()};
        wd.weight = row[3].get<double>();
        ps.points.push_back(wd);
    }
    ps.validate();
    return ps;
}

PointSet load_pointset(const std::string& path) { return parse_pointset(read_file(path)); }

std::string pointset_to_json(const PointSet& ps) {
    json arr = json::array();
    for (const auto& wd : ps.points)
        arr.push_back({wd.dir[0], wd.dir[1], wd.dir[2], wd.weight});
    return dump(json{{"points", arr}});
}

AnsatzSpec parse_ansatz(const std::string& text) {
    const json j = parse_text(text, "ansatz");
    const json& var = field(j, "variant", "ansatz");
    if (!var.is_string()) throw std::runtime_error("ansatz: \"variant\" must be a string");
    const std::string name = var.get<std::string>();
    if (name == "simplified") {
        SimplifiedAnsatz a;
        a.signs = sign_list(field(j, "signs", "ansatz"), "ansatz");
        return a;
    }
    if (name == "general") {
        GeneralAnsatz a;
        a.axes = vec3_list(j, "n", "ansatz");
        a.states = vec3_list(j, "m", "ansatz");
        if (a.axes.size() != a.states.size())
            throw std::runtime_error("ansatz: \"n\" and \"m\" must have equal length");
        return a;
    }
    throw std::runtime_error("ansatz: variant must be \"simplified\" or \"general\"");
}

AnsatzSpec load_ansatz(const std::string& path) { return parse_ansatz(read_file(path)); }

std::string ansatz_to_json(const AnsatzSpec& a) {
    if (const auto* s = std::get_if<SimplifiedAnsatz>(&a))
        return dump(json{{"variant", "simplified"}, {"signs", s->signs}});
    const auto& g = std::get<GeneralAnsatz>(a);
    json axes = json::array(), states = json::array();
    for (const auto& v : g.axes) axes.push_back({v[0], v[1], v[2]});
    for (const auto& v : g.states) states.push_back({v[0], v[1], v[2]});
    return dump(json{{"variant", "general"}, {"n", axes}, {"m", states}});
}

EdgeObservable parse_coeffs(const std::string& text) {
    const json j = parse_text(text, "coeffs");
    EdgeObservable obs;
    obs.c_i = field(j, "i", "coeffs").get<double>();
    obs.c_xx = field(j, "xx", "coeffs").get<double>();
    obs.c_yy = field(j, "yy", "coeffs").get<double>();
    obs.c_zz = field(j, "zz", "coeffs").get<double>();
    return obs;
}

}  // namespace hamqaoa::io
