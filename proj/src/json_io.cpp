#include "cpnum/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cpnum/errors.hpp"

namespace cpnum {

namespace {

using nlohmann::json;

std::vector<int> int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("json: " + what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("json: " + what + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("json: " + what + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() ||
        !x[1].is_number_integer())
      throw ParseError("json: " + what + " entries must be integer pairs");
    out.emplace_back(x[0].get<int>(), x[1].get<int>());
  }
  return out;
}

json pair_list_json(const std::vector<std::pair<int, int>>& ps) {
  json out = json::array();
  for (auto [a, b] : ps) out.push_back({a, b});
  return out;
}

const json& field(const json& j, const std::string& name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError("json: missing field '" + name + "'");
  return j[name];
}

}  // namespace

json graph_to_json(const Graph& g) {
  return json::parse(serialize_graph(g, GraphFormat::Json));
}

Graph graph_from_json(const json& j) {
  return parse_graph(j.dump(), GraphFormat::Json);
}

json witness_to_json(const CpWitness& w) {
  json j;
  j["n"] = w.base.vertex_count();
  j["added"] = w.added;
  j["arcs"] = pair_list_json(w.dag.arcs());
  j["trail"] = w.trail;
  return j;
}

CpWitness witness_from_json(const Graph& base, const json& j) {
  CpWitness w;
  w.base = base;
  if (!field(j, "n").is_number_integer() || field(j, "n").get<int>() != base.vertex_count())
    throw ParseError("json: witness 'n' does not match the graph");
  if (!field(j, "added").is_number_integer() || j["added"].get<int>() < 0)
    throw ParseError("json: witness 'added' must be a non-negative integer");
  w.added = j["added"].get<int>();
  Digraph d(base.vertex_count() + w.added);
  for (auto [u, v] : pair_list(field(j, "arcs"), "arcs")) {
    if (u < 0 || v < 0 || u >= d.vertex_count() || v >= d.vertex_count())
      throw ParseError("json: witness arc endpoint out of range");
    if (u == v) throw ParseError("json: witness arc is a self-loop");
    if (d.has_arc(u, v)) throw ParseError("json: witness arc duplicated");
    d.add_arc(u, v);
  }
  w.dag = std::move(d);
  if (j.contains("trail")) {
    if (!j["trail"].is_array()) throw ParseError("json: 'trail' must be an array");
    for (const auto& s : j["trail"]) {
      if (!s.is_string()) throw ParseError("json: trail entries must be strings");
      w.trail.push_back(s.get<std::string>());
    }
  }
  return w;
}

json lm_cover_to_json(const LMCover& l) {
  json j;
  j["ordering"] = l.ordering;
  json cs = json::array();
  for (const Clique& c : l.cliques) cs.push_back(c);
  j["cliques"] = cs;
  return j;
}

LMCover lm_cover_from_json(const json& j) {
  LMCover l;
  l.ordering = int_vector(field(j, "ordering"), "ordering");
  if (!field(j, "cliques").is_array()) throw ParseError("json: 'cliques' must be an array");
  for (const auto& c : j["cliques"]) l.cliques.push_back(int_vector(c, "clique"));
  return l;
}

json reconstruction_to_json(const Reconstruction& r) {
  json j;
  j["host"] = graph_to_json(r.host);
  j["phi"] = r.phi;
  json trees = json::array();
  for (const SubTree& t : r.trees) {
    json tj;
    tj["vertices"] = t.vertices;
    tj["edges"] = pair_list_json(t.edges);
    trees.push_back(tj);
  }
  j["trees"] = trees;
  return j;
}

Reconstruction reconstruction_from_json(const json& j) {
  Reconstruction r;
  r.host = graph_from_json(field(j, "host"));
  r.phi = int_vector(field(j, "phi"), "phi");
  if (!field(j, "trees").is_array()) throw ParseError("json: 'trees' must be an array");
  for (const auto& tj : j["trees"]) {
    SubTree t;
    t.vertices = int_vector(field(tj, "vertices"), "tree vertices");
    t.edges = pair_list(field(tj, "edges"), "tree edges");
    t.canonicalize();
    r.trees.push_back(std::move(t));
  }
  return r;
}

json circular_model_to_json(const CircularIntervalModel& m) {
  json j;
  j["kind"] = "circular";
  j["points"] = m.points;
  j["phi"] = m.phi;
  j["intervals"] = pair_list_json(m.intervals);
  j["fuzzy_nonedges"] = pair_list_json(m.fuzzy_nonedges);
  return j;
}

CircularIntervalModel circular_model_from_json(const json& j) {
  if (field(j, "kind").get<std::string>() != "circular")
    throw ParseError("json: expected kind 'circular'");
  CircularIntervalModel m;
  m.points = field(j, "points").get<int>();
  m.phi = int_vector(field(j, "phi"), "phi");
  m.intervals = pair_list(field(j, "intervals"), "intervals");
  if (j.contains("fuzzy_nonedges"))
    m.fuzzy_nonedges = pair_list(j["fuzzy_nonedges"], "fuzzy_nonedges");
  return m;
}

json strip_model_to_json(const StripModel& m) {
  json j;
  j["kind"] = "strip";
  j["points"] = m.points;
  j["phi"] = m.phi;
  j["intervals"] = pair_list_json(m.intervals);
  j["ends"] = {m.end_a, m.end_b};
  j["fuzzy_nonedges"] = pair_list_json(m.fuzzy_nonedges);
  return j;
}

StripModel strip_model_from_json(const json& j) {
  if (field(j, "kind").get<std::string>() != "strip")
    throw ParseError("json: expected kind 'strip'");
  StripModel m;
  m.points = field(j, "points").get<int>();
  m.phi = int_vector(field(j, "phi"), "phi");
  m.intervals = pair_list(field(j, "intervals"), "intervals");
  std::vector<int> ends = int_vector(field(j, "ends"), "ends");
  if (ends.size() != 2) throw ParseError("json: 'ends' must hold two vertices");
  m.end_a = ends[0];
  m.end_b = ends[1];
  if (j.contains("fuzzy_nonedges"))
    m.fuzzy_nonedges = pair_list(j["fuzzy_nonedges"], "fuzzy_nonedges");
  return m;
}

json strip_composition_to_json(const StripComposition& c) {
  json j;
  j["kind"] = "strip-composition";
  json cliques = json::array();
  for (const auto& cl : c.g0_cliques) cliques.push_back(cl);
  j["g0_cliques"] = cliques;
  j["pairs"] = pair_list_json(c.pairs);
  json strips = json::array();
  for (const StripModel& s : c.strips) strips.push_back(strip_model_to_json(s));
  j["strips"] = strips;
  return j;
}

StripComposition strip_composition_from_json(const json& j) {
  if (field(j, "kind").get<std::string>() != "strip-composition")
    throw ParseError("json: expected kind 'strip-composition'");
  StripComposition c;
  if (!field(j, "g0_cliques").is_array())
    throw ParseError("json: 'g0_cliques' must be an array");
  for (const auto& cl : j["g0_cliques"]) c.g0_cliques.push_back(int_vector(cl, "clique"));
  c.pairs = pair_list(field(j, "pairs"), "pairs");
  if (!field(j, "strips").is_array()) throw ParseError("json: 'strips' must be an array");
  for (const auto& s : j["strips"]) c.strips.push_back(strip_model_from_json(s));
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + path);
  out << content;
}

}  // namespace cpnum
