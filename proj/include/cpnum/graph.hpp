#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpnum {

// A set of pairwise adjacent vertices, kept sorted ascending.
using Clique = std::vector<int>;

// Finite simple undirected graph on vertices 0..n-1. No self-loops, no
// parallel edges. Labels are cosmetic metadata and ignored by equality.
// Values are treated as immutable once built; all operations below are
// pure functions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // throws DomainError on loop, range, duplicate
  const std::vector<int>& neighbors(int v) const;  // sorted ascending
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v

  void set_label(int v, std::string text);
  const std::map<int, std::string>& labels() const { return labels_; }

  bool structurally_equal(const Graph& other) const;
  bool operator==(const Graph& other) const { return structurally_equal(other); }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::map<int, std::string> labels_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // new id -> parent id, ascending
  std::vector<int> from_parent;  // parent id -> new id, -1 if dropped
};

// Subgraph induced by s, relabeled to 0..|s|-1 in ascending parent order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

bool is_clique(const Graph& g, const std::vector<int>& s);

// Exact maximum clique by branch and bound. Exponential worst case;
// intended for neighborhood-sized inputs.
int max_clique_size(const Graph& g);
Clique max_clique(const Graph& g);  // deterministic witness

// Partition of s into at most two cliques of g, if one exists. Computed as
// a 2-coloring of the complement of g[s].
std::optional<std::pair<Clique, Clique>> is_cobipartite(const Graph& g,
                                                        const std::vector<int>& s);

Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_simplicial(const Graph& g, int v);

enum class GraphFormat { EdgeList, Json };

// Edge-list format: first line "n m", then m lines "u v"; '#' starts a
// comment. JSON format: {"n":int,"edges":[[u,v],...],"labels":{...}}.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace cpnum
