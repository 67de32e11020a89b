#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cpnum {

// Finite directed graph on vertices 0..n-1. No self-loops, arcs distinct.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return m_; }
  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);  // throws DomainError on loop, range, duplicate
  const std::vector<int>& out_neighbors(int v) const;
  std::vector<std::pair<int, int>> arcs() const;  // lexicographic

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> out_;
};

// Topological order if d is acyclic, nullopt otherwise. Every arc goes from
// an earlier to a later position of the returned order.
std::optional<std::vector<int>> is_acyclic(const Digraph& d);

}  // namespace cpnum
