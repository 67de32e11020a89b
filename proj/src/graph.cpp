#include "cpnum/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cpnum/errors.hpp"

namespace cpnum {

Graph::Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)), nbrs_(n) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range 0.." +
                      std::to_string(n_ - 1));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (adj_[u][v])
    throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u][v] = adj_[v][u] = true;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return nbrs_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(nbrs_[v].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_label(int v, std::string text) {
  check_vertex(v);
  labels_[v] = std::move(text);
}

bool Graph::structurally_equal(const Graph& other) const {
  return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> keep = s;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("induced_subgraph: vertex " + std::to_string(v) +
                        " not in the graph");
  InducedSubgraph out;
  out.to_parent = keep;
  out.from_parent.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) out.from_parent[keep[i]] = i;
  Graph sub(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(keep.size()); ++j)
      if (g.has_edge(keep[i], keep[j])) sub.add_edge(i, j);
  out.graph = std::move(sub);
  return out;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      if (!g.has_edge(s[i], s[j])) return false;
    }
  return true;
}

namespace {

void max_clique_extend(const Graph& g, std::vector<int>& current,
                       const std::vector<int>& candidates, Clique& best) {
  if (current.size() + candidates.size() <= best.size()) return;
  if (candidates.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) <= best.size()) return;
    int v = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
    current.push_back(v);
    max_clique_extend(g, current, next, best);
    current.pop_back();
  }
}

}  // namespace

Clique max_clique(const Graph& g) {
  Clique best;
  std::vector<int> current;
  std::vector<int> candidates(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) candidates[v] = v;
  max_clique_extend(g, current, candidates, best);
  std::sort(best.begin(), best.end());
  return best;
}

int max_clique_size(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

std::optional<std::pair<Clique, Clique>> is_cobipartite(const Graph& g,
                                                        const std::vector<int>& s) {
  InducedSubgraph sub = induced_subgraph(g, s);
  const Graph& h = sub.graph;
  int k = h.vertex_count();
  // 2-color the complement of g[s]; color classes are cliques of g.
  std::vector<int> color(k, -1);
  for (int start = 0; start < k; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < k; ++v) {
        if (v == u || h.has_edge(u, v)) continue;  // complement edge iff non-adjacent
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Clique a, b;
  for (int v = 0; v < k; ++v) (color[v] == 0 ? a : b).push_back(sub.to_parent[v]);
  return std::make_pair(a, b);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool is_complete(const Graph& g) {
  int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_simplicial(const Graph& g, int v) { return is_clique(g, g.neighbors(v)); }

}  // namespace cpnum
