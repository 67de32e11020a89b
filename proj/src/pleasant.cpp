#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

namespace {

std::map<int, int> tree_degrees(const SubTree& t) {
  std::map<int, int> deg;
  for (int v : t.vertices) deg[v] = 0;
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool has_preimage(const Reconstruction& r, int host_vertex) {
  for (int img : r.phi)
    if (img == host_vertex) return true;
  return false;
}

void sort_trees(Reconstruction& r) {
  for (SubTree& t : r.trees) t.canonicalize();
  std::sort(r.trees.begin(), r.trees.end());
  r.trees.erase(std::unique(r.trees.begin(), r.trees.end()), r.trees.end());
}

}  // namespace

PleasantReport validate_pleasant(const Graph& g, const Reconstruction& r) {
  ReconstructionReport base = validate_reconstruction(g, r);
  if (!base.ok())
    throw DomainError("validate_pleasant: reconstruction invalid: " + base.detail);
  PleasantReport rep;
  std::ostringstream detail;

  rep.p5 = true;
  for (const FuzzyPair& f : fuzzy_pairs(g, r)) {
    auto side = [&](int v, int partner) {
      for (int w : g.neighbors(v))
        if (r.phi[w] == r.phi[partner]) return true;
      return false;
    };
    if (!side(f.a, f.b) || !side(f.b, f.a)) {
      rep.p5 = false;
      detail << "p5: fuzzy pair {" << f.a << "," << f.b << "} lacks a witness neighbor; ";
      break;
    }
  }

  rep.p6 = true;
  for (std::size_t v = 0; v < r.phi.size(); ++v)
    if (r.host.degree(r.phi[v]) > 2) {
      rep.p6 = false;
      detail << "p6: image of " << v << " has host degree " << r.host.degree(r.phi[v])
             << "; ";
      break;
    }

  rep.p7 = true;
  for (std::size_t i = 0; i < r.trees.size() && rep.p7; ++i) {
    const SubTree& t = r.trees[i];
    if (t.vertices.size() < 2) {
      rep.p7 = false;
      detail << "p7: tree " << i << " has fewer than two vertices; ";
      break;
    }
    for (auto [v, d] : tree_degrees(t))
      if (d == 1 && !has_preimage(r, v)) {
        rep.p7 = false;
        detail << "p7: leaf " << v << " of tree " << i << " has no preimage; ";
        break;
      }
  }

  rep.p8 = true;
  for (auto [a, b] : r.host.edges()) {
    bool used = false;
    for (const SubTree& t : r.trees)
      if (t.contains_edge(a, b)) {
        used = true;
        break;
      }
    if (!used) {
      rep.p8 = false;
      detail << "p8: host edge " << a << "-" << b << " lies in no tree; ";
      break;
    }
  }

  rep.p9 = true;
  for (std::size_t i = 0; i < r.trees.size() && rep.p9; ++i)
    for (std::size_t j = 0; j < r.trees.size(); ++j) {
      if (i == j) continue;
      if (std::includes(r.trees[j].vertices.begin(), r.trees[j].vertices.end(),
                        r.trees[i].vertices.begin(), r.trees[i].vertices.end())) {
        rep.p9 = false;
        detail << "p9: tree " << i << "'s vertices are contained in tree " << j << "; ";
        break;
      }
    }

  rep.detail = detail.str();
  return rep;
}

namespace detail {

void split_fuzzy_tree(Reconstruction& r, int tree, int p, int q,
                      const std::vector<int>& remap) {
  const SubTree t = r.trees[tree];
  // p's neighbor within the path t.
  int h = -1;
  for (auto [a, b] : t.edges) {
    if (a == p) h = b;
    if (b == p) h = a;
    if (h != -1) break;
  }
  if (h == -1) throw InvariantViolation("split_fuzzy_tree: p is not in the tree");

  int h2 = r.host.vertex_count();
  {
    std::vector<std::pair<int, int>> host_edges;
    for (auto e : r.host.edges())
      if (!(e.first == std::min(p, h) && e.second == std::max(p, h)))
        host_edges.push_back(e);
    host_edges.push_back({p, h2});
    host_edges.push_back({h2, h});
    r.host = Graph::from_edges(h2 + 1, host_edges);
  }

  std::vector<SubTree> next;
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    SubTree u = r.trees[i];
    bool through_edge = u.contains_edge(p, h);
    if (through_edge) {
      u.edges.erase(std::remove(u.edges.begin(), u.edges.end(),
                                std::make_pair(std::min(p, h), std::max(p, h))),
                    u.edges.end());
      u.vertices.push_back(h2);
      u.edges.push_back({std::min(p, h2), std::max(p, h2)});
      u.edges.push_back({std::min(h2, h), std::max(h2, h)});
      u.canonicalize();
    } else if (u.contains_vertex(p) && static_cast<int>(i) != tree) {
      u.vertices.push_back(h2);
      u.edges.push_back({std::min(p, h2), std::max(p, h2)});
      u.canonicalize();
    }
    if (static_cast<int>(i) == tree) {
      // u is the subdivided path; split into u - p and u - q.
      auto drop = [](SubTree s, int gone) {
        s.vertices.erase(std::remove(s.vertices.begin(), s.vertices.end(), gone),
                         s.vertices.end());
        s.edges.erase(std::remove_if(s.edges.begin(), s.edges.end(),
                                     [gone](std::pair<int, int> e) {
                                       return e.first == gone || e.second == gone;
                                     }),
                      s.edges.end());
        s.canonicalize();
        return s;
      };
      next.push_back(drop(u, p));
      next.push_back(drop(u, q));
    } else {
      next.push_back(std::move(u));
    }
  }
  r.trees = std::move(next);
  for (int w : remap) r.phi[w] = h2;
  sort_trees(r);
}

}  // namespace detail

Reconstruction normalize_trees(const Graph& g, Reconstruction r) {
  sort_trees(r);

  // Every tree gets two distinct useful images, or goes away.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r.trees.size(); ++i) {
      const SubTree& t = r.trees[i];
      std::set<int> images;
      std::vector<int> mapped;
      for (std::size_t v = 0; v < r.phi.size(); ++v)
        if (t.contains_vertex(r.phi[v])) {
          images.insert(r.phi[v]);
          mapped.push_back(static_cast<int>(v));
        }
      if (images.size() >= 2) continue;
      if (mapped.size() <= 1) {
        r.trees.erase(r.trees.begin() + i);
        changed = true;
        break;
      }
      int h = *images.begin();
      bool elsewhere = false;
      for (std::size_t j = 0; j < r.trees.size(); ++j)
        if (j != i && r.trees[j].contains_vertex(h)) {
          elsewhere = true;
          break;
        }
      if (elsewhere) {
        r.trees.erase(r.trees.begin() + i);
      } else {
        int h2 = r.host.vertex_count();
        std::vector<std::pair<int, int>> host_edges = r.host.edges();
        host_edges.push_back({h, h2});
        r.host = Graph::from_edges(h2 + 1, host_edges);
        SubTree fresh;
        fresh.vertices = {h, h2};
        fresh.edges = {{h, h2}};
        fresh.canonicalize();
        r.trees[i] = fresh;
        r.phi[mapped.front()] = h2;
        sort_trees(r);
      }
      changed = true;
      break;
    }
  }

  // Trim image-free leaves.
  for (SubTree& t : r.trees) {
    bool trimmed = true;
    while (trimmed) {
      trimmed = false;
      for (auto [v, d] : tree_degrees(t)) {
        if (d != 1 || has_preimage(r, v)) continue;
        t.vertices.erase(std::remove(t.vertices.begin(), t.vertices.end(), v),
                         t.vertices.end());
        t.edges.erase(std::remove_if(t.edges.begin(), t.edges.end(),
                                     [v](std::pair<int, int> e) {
                                       return e.first == v || e.second == v;
                                     }),
                      t.edges.end());
        trimmed = true;
        break;
      }
    }
  }
  sort_trees(r);

  // Drop trees whose vertex set sits inside another tree's.
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r.trees.size() && !changed; ++i)
      for (std::size_t j = 0; j < r.trees.size(); ++j) {
        if (i == j) continue;
        if (std::includes(r.trees[j].vertices.begin(), r.trees[j].vertices.end(),
                          r.trees[i].vertices.begin(), r.trees[i].vertices.end())) {
          r.trees.erase(r.trees.begin() + i);
          changed = true;
          break;
        }
      }
  }

  // Keep only host edges used by some tree.
  {
    std::set<std::pair<int, int>> used;
    for (const SubTree& t : r.trees)
      for (auto e : t.edges) used.insert(e);
    std::vector<std::pair<int, int>> host_edges;
    for (auto e : r.host.edges())
      if (used.count(e)) host_edges.push_back(e);
    r.host = Graph::from_edges(r.host.vertex_count(), host_edges);
  }

  ReconstructionReport rep = validate_reconstruction(g, r);
  if (!rep.ok())
    throw InvariantViolation("normalize_trees broke the reconstruction: " + rep.detail);
  return r;
}

Reconstruction pleasantify(const Graph& g, Reconstruction r) {
  ReconstructionReport pre = validate_reconstruction(g, r);
  if (!pre.ok()) throw DomainError("pleasantify: reconstruction invalid: " + pre.detail);
  sort_trees(r);

  // (a) Resolve fuzzy pairs that lack the neighbor witness. Each pass must
  // strictly shrink the fuzzy-pair count, which bounds the loop.
  for (;;) {
    std::vector<FuzzyPair> fps = fuzzy_pairs(g, r);
    int v = -1, partner = -1, tree = -1;
    for (const FuzzyPair& f : fps) {
      auto witnessed = [&](int side, int other) {
        for (int w : g.neighbors(side))
          if (r.phi[w] == r.phi[other]) return true;
        return false;
      };
      if (!witnessed(f.a, f.b)) {
        v = f.a;
        partner = f.b;
        tree = f.tree;
        break;
      }
      if (!witnessed(f.b, f.a)) {
        v = f.b;
        partner = f.a;
        tree = f.tree;
        break;
      }
    }
    if (v == -1) break;
    std::vector<int> remap;
    for (int w : r.preimages(r.phi[v]))
      if (w != v) remap.push_back(w);
    detail::split_fuzzy_tree(r, tree, r.phi[v], r.phi[partner], remap);
    ReconstructionReport rep = validate_reconstruction(g, r);
    if (!rep.ok())
      throw InvariantViolation("fuzzy-pair reduction broke the reconstruction: " +
                               rep.detail);
    if (fuzzy_pairs(g, r).size() >= fps.size())
      throw InvariantViolation("fuzzy-pair reduction failed to make progress");
  }

  // (b) Push images off host vertices of degree >= 3.
  for (;;) {
    int v = -1;
    for (std::size_t w = 0; w < r.phi.size(); ++w)
      if (r.host.degree(r.phi[w]) >= 3) {
        v = static_cast<int>(w);
        break;
      }
    if (v == -1) break;
    int p = r.phi[v];
    int owner = -1;
    for (std::size_t i = 0; i < r.trees.size(); ++i)
      if (r.trees[i].contains_vertex(p)) {
        if (owner != -1)
          throw InvariantViolation("degree-3 host vertex lies in two trees");
        owner = static_cast<int>(i);
      }
    int h2 = r.host.vertex_count();
    std::vector<std::pair<int, int>> host_edges = r.host.edges();
    host_edges.push_back({p, h2});
    r.host = Graph::from_edges(h2 + 1, host_edges);
    if (owner != -1) {
      r.trees[owner].vertices.push_back(h2);
      r.trees[owner].edges.push_back({p, h2});
      r.trees[owner].canonicalize();
    }
    for (int w : r.preimages(p)) r.phi[w] = h2;
    sort_trees(r);
    ReconstructionReport rep = validate_reconstruction(g, r);
    if (!rep.ok())
      throw InvariantViolation("degree reduction broke the reconstruction: " +
                               rep.detail);
  }

  // (c)+(d)
  r = normalize_trees(g, r);

  PleasantReport rep = validate_pleasant(g, r);
  if (!rep.ok())
    throw InvariantViolation("pleasantify did not reach a pleasant reconstruction: " +
                             rep.detail);
  return r;
}

}  // namespace cpnum
