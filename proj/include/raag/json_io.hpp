#ifndef RAAG_JSON_IO_HPP
#define RAAG_JSON_IO_HPP

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raag/curves.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph_map.hpp"

namespace raag {

using json = nlohmann::json;

// All readers convert parse failures and shape mismatches into input_error
// with the offending file and, for syntax errors, the byte position reported
// by the parser.

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace io_detail {

inline const json& field(const json& j, const std::string& key, const std::string& what) {
  if (!j.is_object()) throw input_error(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(what + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw input_error(what + ": expected a string");
  return j.get<std::string>();
}

}  // namespace io_detail

// {"vertices": ["a","b",...], "edges": [["a","b"],...]}
inline Graph graph_from_json(const json& j, const std::string& what = "graph") {
  std::vector<std::string> vertices;
  for (const auto& v : io_detail::field(j, "vertices", what))
    vertices.push_back(io_detail::as_string(v, what + ".vertices"));
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t k = 0;
  for (const auto& e : io_detail::field(j, "edges", what)) {
    std::string where = what + ".edges[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 2) throw input_error(where + ": expected a pair");
    edges.emplace_back(io_detail::as_string(e[0], where), io_detail::as_string(e[1], where));
  }
  for (const auto& [a, b] : edges) {
    auto declared = [&](const std::string& v) {
      return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    };
    if (!declared(a) || !declared(b))
      throw input_error(what + ": edge {" + a + "," + b + "} uses an undeclared vertex");
  }
  try {
    return Graph(std::move(vertices), std::move(edges));
  } catch (const input_error& e) {
    throw input_error(what + ": " + e.what());
  }
}

inline json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

inline Graph load_graph(const std::string& path) {
  return graph_from_json(load_json_file(path), path);
}

// {"source": <graph>, "target": <graph>, "assignment": {"x":"u", ...}}
inline VertexMap map_from_json(const json& j, const std::string& what = "map") {
  VertexMap f{graph_from_json(io_detail::field(j, "source", what), what + ".source"),
              graph_from_json(io_detail::field(j, "target", what), what + ".target"),
              {}};
  const json& a = io_detail::field(j, "assignment", what);
  if (!a.is_object()) throw input_error(what + ".assignment: expected an object");
  for (const auto& [v, u] : a.items())
    f.assignment[v] = io_detail::as_string(u, what + ".assignment." + v);
  try {
    validate(f);
  } catch (const input_error& e) {
    throw input_error(what + ": " + e.what());
  }
  return f;
}

inline json map_to_json(const VertexMap& f) {
  json j;
  j["source"] = graph_to_json(f.source);
  j["target"] = graph_to_json(f.target);
  j["assignment"] = json::object();
  for (const auto& [v, u] : f.assignment) j["assignment"][v] = u;
  return j;
}

inline VertexMap load_map(const std::string& path) {
  return map_from_json(load_json_file(path), path);
}

// {"surface": "N{1,6}", "curves": [{"name":"a","sided":"two"},...],
//  "i": [["a","b",2],...]}; omitted pairs default to 0.
inline CurveSystem curve_system_from_json(const json& j, const std::string& what = "curves") {
  SurfaceType ambient =
      parse_surface(io_detail::as_string(io_detail::field(j, "surface", what), what + ".surface"));
  std::vector<Curve> curves;
  for (const auto& c : io_detail::field(j, "curves", what)) {
    std::string name = io_detail::as_string(io_detail::field(c, "name", what + ".curves"),
                                            what + ".curves.name");
    std::string sided = io_detail::as_string(io_detail::field(c, "sided", what + ".curves"),
                                             what + ".curves.sided");
    if (sided != "one" && sided != "two")
      throw input_error(what + ": curve '" + name + "' has sided \"" + sided +
                        "\" (expected \"one\" or \"two\")");
    curves.push_back({name, sided == "two"});
  }
  std::vector<std::tuple<std::string, std::string, int>> inter;
  if (j.contains("i")) {
    std::size_t k = 0;
    for (const auto& e : j.at("i")) {
      std::string where = what + ".i[" + std::to_string(k++) + "]";
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer())
        throw input_error(where + ": expected [name, name, count]");
      inter.emplace_back(io_detail::as_string(e[0], where), io_detail::as_string(e[1], where),
                         e[2].get<int>());
    }
  }
  try {
    return CurveSystem(ambient, std::move(curves), std::move(inter));
  } catch (const input_error& e) {
    throw input_error(what + ": " + e.what());
  }
}

inline json curve_system_to_json(const CurveSystem& cs) {
  json j;
  j["surface"] = format_surface(cs.ambient());
  j["curves"] = json::array();
  for (const auto& c : cs.curves())
    j["curves"].push_back({{"name", c.name}, {"sided", c.two_sided ? "two" : "one"}});
  j["i"] = json::array();
  const auto& cv = cs.curves();
  for (std::size_t a = 0; a < cv.size(); ++a)
    for (std::size_t b = a + 1; b < cv.size(); ++b)
      if (int n = cs.intersection(cv[a].name, cv[b].name); n != 0)
        j["i"].push_back({cv[a].name, cv[b].name, n});
  return j;
}

inline CurveSystem load_curve_system(const std::string& path) {
  return curve_system_from_json(load_json_file(path), path);
}

// {"lifts": {"a":["a1","a2"],...}, "pairs": [["a1","a2"],...],
//  "i": [["a1","b1",2],...]}; "i" mirrors the curve-system section and
//  "pairs" records the deck involution on the upstairs names.
inline LiftSpec lift_spec_from_json(const json& j, const std::string& what = "lift") {
  LiftSpec spec;
  const json& lifts = io_detail::field(j, "lifts", what);
  if (!lifts.is_object()) throw input_error(what + ".lifts: expected an object");
  for (const auto& [down, comps] : lifts.items()) {
    if (!comps.is_array()) throw input_error(what + ".lifts." + down + ": expected an array");
    for (const auto& n : comps)
      spec.lifts[down].push_back(io_detail::as_string(n, what + ".lifts." + down));
  }
  for (const auto& p : io_detail::field(j, "pairs", what)) {
    if (!p.is_array() || p.size() != 2) throw input_error(what + ".pairs: expected pairs");
    std::string a = io_detail::as_string(p[0], what + ".pairs");
    std::string b = io_detail::as_string(p[1], what + ".pairs");
    spec.pairing[a] = b;
    spec.pairing[b] = a;
  }
  if (j.contains("i")) {
    std::size_t k = 0;
    for (const auto& e : j.at("i")) {
      std::string where = what + ".i[" + std::to_string(k++) + "]";
      if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer())
        throw input_error(where + ": expected [name, name, count]");
      spec.intersections.emplace_back(io_detail::as_string(e[0], where),
                                      io_detail::as_string(e[1], where), e[2].get<int>());
    }
  }
  return spec;
}

inline json lift_spec_to_json(const LiftSpec& spec) {
  json j;
  j["lifts"] = json::object();
  for (const auto& [down, comps] : spec.lifts) j["lifts"][down] = comps;
  j["pairs"] = json::array();
  for (const auto& [a, b] : spec.pairing)
    if (a < b) j["pairs"].push_back({a, b});
  j["i"] = json::array();
  for (const auto& [a, b, n] : spec.intersections) j["i"].push_back({a, b, n});
  return j;
}

inline LiftSpec load_lift_spec(const std::string& path) {
  return lift_spec_from_json(load_json_file(path), path);
}

inline GammaBundle load_gamma_bundle(const std::string& data_dir) {
  return make_gamma_bundle(load_graph(data_dir + "/gamma0.json"),
                           load_graph(data_dir + "/gamma1.json"));
}

// Graphviz rendering for --emit-dot.
inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (const auto& v : g.vertices()) out += "  \"" + v + "\";\n";
  for (const auto& [a, b] : g.edges()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace raag

#endif
