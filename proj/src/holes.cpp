#include "cpnum/holes.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cpnum/errors.hpp"
#include "cpnum/gf2.hpp"

namespace cpnum {

bool Hole::contains(int v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

std::vector<std::pair<int, int>> Hole::edge_list() const {
  std::vector<std::pair<int, int>> out;
  int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % k];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Hole canonical_hole(const std::vector<int>& cycle) {
  int k = static_cast<int>(cycle.size());
  if (k < 4) throw DomainError("hole must have length at least 4");
  int pos = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  int left = cycle[(pos + k - 1) % k], right = cycle[(pos + 1) % k];
  std::vector<int> out;
  out.reserve(k);
  if (right <= left)
    for (int i = 0; i < k; ++i) out.push_back(cycle[(pos + i) % k]);
  else
    for (int i = 0; i < k; ++i) out.push_back(cycle[(pos + k - i) % k]);
  return Hole{out};
}

bool is_hole_of(const Graph& g, const Hole& h) {
  int k = static_cast<int>(h.cycle.size());
  if (k < 4) return false;
  std::set<int> distinct(h.cycle.begin(), h.cycle.end());
  if (static_cast<int>(distinct.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(h.cycle[i], h.cycle[j]) != consecutive) return false;
    }
  return true;
}

std::vector<Hole> enumerate_holes(const Graph& g, std::size_t limit) {
  int n = g.vertex_count();
  std::vector<Hole> out;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  // Chordless-path DFS. The cycle's minimum vertex u sits between its two
  // cycle-neighbors x < y; the path grows from y and closes on a vertex
  // adjacent to x, so every hole is produced exactly once.
  auto extend = [&](auto&& self) -> void {
    int x = path[0];
    int u = path[1];
    int tail = path.back();
    for (int v : g.neighbors(tail)) {
      if (v <= u || on_path[v]) continue;
      bool chord = g.has_edge(v, u);
      for (std::size_t i = 2; !chord && i + 1 < path.size(); ++i)
        chord = g.has_edge(v, path[i]);
      if (chord) continue;
      if (g.has_edge(v, x)) {
        path.push_back(v);
        out.push_back(canonical_hole(path));
        path.pop_back();
        if (out.size() > limit)
          throw LimitError("hole enumeration exceeded limit of " + std::to_string(limit));
      } else {
        path.push_back(v);
        on_path[v] = true;
        self(self);
        on_path[v] = false;
        path.pop_back();
      }
    }
  };

  for (int u = 0; u < n; ++u) {
    const std::vector<int>& nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      int x = nu[i];
      if (x <= u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        int y = nu[j];
        if (y <= u || g.has_edge(x, y)) continue;
        path = {x, u, y};
        on_path.assign(n, false);
        on_path[x] = on_path[u] = on_path[y] = true;
        extend(extend);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int holes_at(const Graph& g, int v, std::size_t limit) {
  if (v < 0 || v >= g.vertex_count()) throw DomainError("holes_at: vertex out of range");
  int count = 0;
  for (const Hole& h : enumerate_holes(g, limit))
    if (h.contains(v)) ++count;
  return count;
}

int hole_space_dim(const Graph& g, std::size_t limit) {
  EdgeIndex idx(g.edges());
  Gf2Basis basis(idx.count());
  for (const Hole& h : enumerate_holes(g, limit)) {
    Gf2Vector vec(idx.count());
    for (auto [u, v] : h.edge_list()) vec.flip(idx.index_of(u, v));
    basis.insert(std::move(vec));
  }
  return basis.rank();
}

DefectReport simplicial_defect(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("simplicial_defect: vertex out of range");
  DefectReport r;
  r.vertex = v;
  const std::vector<int>& nv = g.neighbors(v);
  InducedSubgraph sub = induced_subgraph(g, nv);
  Clique local = max_clique(sub.graph);
  for (int w : local) r.witness_clique.push_back(sub.to_parent[w]);
  std::sort(r.witness_clique.begin(), r.witness_clique.end());
  r.omega = static_cast<int>(r.witness_clique.size());
  r.defect = static_cast<int>(nv.size()) - r.omega;
  std::set_difference(nv.begin(), nv.end(), r.witness_clique.begin(),
                      r.witness_clique.end(), std::back_inserter(r.leftover));
  return r;
}

std::optional<GoodVertexCertificate> is_good_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("is_good_vertex: vertex out of range");
  int n = g.vertex_count();
  GoodVertexCertificate cert;
  cert.vertex = v;
  const std::vector<int>& nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      int u = nv[i], u2 = nv[j];
      if (g.has_edge(u, u2)) continue;
      // Allowed interior vertices: everything except v and N(v)\{u,u'}.
      std::vector<bool> blocked(n, false);
      blocked[v] = true;
      for (int w : nv)
        if (w != u && w != u2) blocked[w] = true;
      std::vector<int> parent(n, -2);
      std::queue<int> q;
      parent[u] = -1;
      q.push(u);
      while (!q.empty() && parent[u2] == -2) {
        int a = q.front();
        q.pop();
        for (int b : g.neighbors(a)) {
          if (blocked[b] || parent[b] != -2) continue;
          parent[b] = a;
          q.push(b);
        }
      }
      if (parent[u2] == -2) return std::nullopt;
      std::vector<int> cycle{v};
      std::vector<int> rev;
      for (int w = u2; w != -1; w = parent[w]) rev.push_back(w);
      for (auto it = rev.rbegin(); it != rev.rend(); ++it) cycle.push_back(*it);
      Hole h = canonical_hole(cycle);
      if (!is_hole_of(g, h))
        throw InvariantViolation("good-vertex path did not close into a hole");
      cert.pairs.push_back({u, u2, h});
    }
  return cert;
}

std::pair<int, GoodVertexCertificate> find_good_vertex(const Graph& g) {
  if (g.vertex_count() < 1) throw DomainError("find_good_vertex: empty graph");
  int best = -1, best_defect = 0;
  GoodVertexCertificate best_cert;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::optional<GoodVertexCertificate> cert = is_good_vertex(g, v);
    if (!cert) continue;
    int d = simplicial_defect(g, v).defect;
    if (best == -1 || d < best_defect) {
      best = v;
      best_defect = d;
      best_cert = std::move(*cert);
    }
  }
  if (best == -1)
    throw InvariantViolation("no good vertex found; every graph has one");
  return {best, std::move(best_cert)};
}

}  // namespace cpnum
