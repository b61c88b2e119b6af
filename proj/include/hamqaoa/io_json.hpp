#pragma once

#include <string>

#include "hamqaoa/formula_infinite.hpp"
#include "hamqaoa/graph.hpp"
#include "hamqaoa/hamiltonian.hpp"
#include "hamqaoa/pointset.hpp"
#include "hamqaoa/schedule.hpp"
#include "hamqaoa/simulator.hpp"

// JSON formats:
//   graph     {"n": int, "edges": [[u, v] | [u, v, w], ...]}
//   signs     {"signs": [1, -1, ...]}
//   params    {"alpha": [...], "beta": [...], "gamma": [...], "delta": [...]}
//   rescaled  {"alpha_tilde": [...], "beta": [...], "delta": [...]}
//   pointset  {"points": [[x, y, z, w], ...]}
//   ansatz    {"variant": "simplified", "signs": [...]}
//           | {"variant": "general", "n": [[x,y,z], ...], "m": [[x,y,z], ...]}
//   coeffs    {"i": c, "xx": c, "yy": c, "zz": c}
// Parsers take JSON text; loaders read a file and parse. Serializers emit
// deterministic text (sorted keys, 17 significant digits) ending in a newline.
namespace hamqaoa::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

InteractionGraph parse_graph(const std::string& text);
InteractionGraph load_graph(const std::string& path);
std::string graph_to_json(const InteractionGraph& g);

SignString parse_signs(const std::string& text);
SignString load_signs(const std::string& path);
std::string signs_to_json(const SignString& s);

ParamSchedule parse_params(const std::string& text);
ParamSchedule load_params(const std::string& path);
std::string params_to_json(const ParamSchedule& th);

RescaledParams parse_rescaled(const std::string& text);
RescaledParams load_rescaled(const std::string& path);
std::string rescaled_to_json(const RescaledParams& r);

PointSet parse_pointset(const std::string& text);
PointSet load_pointset(const std::string& path);
std::string pointset_to_json(const PointSet& ps);

AnsatzSpec parse_ansatz(const std::string& text);
AnsatzSpec load_ansatz(const std::string& path);
std::string ansatz_to_json(const AnsatzSpec& a);

EdgeObservable parse_coeffs(const std::string& text);

}  // namespace hamqaoa::io
