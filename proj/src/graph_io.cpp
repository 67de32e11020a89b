#include <algorithm>
#include <sstream>
#include <string>

#include "cpnum/errors.hpp"
#include "cpnum/graph.hpp"
#include "json.hpp"

namespace cpnum {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

long parse_int(const std::string& tok, int lineno) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" +
                     tok + "'");
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" +
                     tok + "'");
  return value;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  long n = 0, m = 0, edges_seen = 0;
  Graph g;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    if (b.empty() || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected exactly two integers");
    long x = parse_int(a, lineno), y = parse_int(b, lineno);
    if (!have_header) {
      if (x < 0 || y < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative header value");
      n = x;
      m = y;
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    ++edges_seen;
    if (edges_seen > m)
      throw ParseError("line " + std::to_string(lineno) + ": more than " +
                       std::to_string(m) + " edges");
    if (x == y) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range");
    if (g.has_edge(static_cast<int>(x), static_cast<int>(y)))
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    g.add_edge(static_cast<int>(x), static_cast<int>(y));
  }
  if (!have_header) throw ParseError("line 1: missing 'n m' header");
  if (edges_seen != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges_seen));
  return g;
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("json: missing integer field 'n'");
  long n = j["n"].get<long>();
  if (n < 0) throw ParseError("json: negative 'n'");
  Graph g(static_cast<int>(n));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("json: 'edges' must be an array");
    int idx = 0;
    for (const auto& e : j["edges"]) {
      ++idx;
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("json: edge " + std::to_string(idx) + " must be [u,v]");
      long u = e[0].get<long>(), v = e[1].get<long>();
      if (u == v) throw ParseError("json: edge " + std::to_string(idx) + " is a self-loop");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("json: edge " + std::to_string(idx) + " endpoint out of range");
      if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
        throw ParseError("json: edge " + std::to_string(idx) + " duplicated");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw ParseError("json: 'labels' must be an object");
    for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it) {
      long v;
      try {
        v = std::stol(it.key());
      } catch (const std::exception&) {
        throw ParseError("json: label key '" + it.key() + "' is not a vertex id");
      }
      if (v < 0 || v >= n) throw ParseError("json: label vertex out of range");
      if (!it.value().is_string()) throw ParseError("json: label value must be a string");
      g.set_label(static_cast<int>(v), it.value().get<std::string>());
    }
  }
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_json_graph(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::EdgeList) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
  }
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels().empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
    j["labels"] = labels;
  }
  return j.dump(2) + "\n";
}

}  // namespace cpnum
