#include "cpnum/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cpnum/errors.hpp"

namespace cpnum {

Digraph::Digraph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)), out_(n) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range 0.." +
                      std::to_string(n_ - 1));
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop arc at vertex " + std::to_string(u));
  if (adj_[u][v])
    throw DomainError("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
  adj_[u][v] = true;
  out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
  ++m_;
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

std::optional<std::vector<int>> is_acyclic(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : d.out_neighbors(u)) ++indeg[v];
  // Kahn's algorithm with a min-queue for a deterministic order.
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : d.out_neighbors(u))
      if (--indeg[v] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace cpnum
