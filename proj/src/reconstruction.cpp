#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

void SubTree::canonicalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool SubTree::contains_vertex(int h) const {
  return std::binary_search(vertices.begin(), vertices.end(), h);
}

bool SubTree::contains_edge(int a, int b) const {
  std::pair<int, int> key{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), key);
}

std::vector<int> Reconstruction::preimages(int host_vertex) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < phi.size(); ++v)
    if (phi[v] == host_vertex) out.push_back(static_cast<int>(v));
  return out;
}

namespace {

// Structural defect message, or nullopt if t is a subtree of host.
std::optional<std::string> check_subtree(const Graph& host, const SubTree& t) {
  if (t.vertices.empty()) return "tree has no vertices";
  for (int v : t.vertices)
    if (v < 0 || v >= host.vertex_count()) return "tree vertex out of range";
  if (!std::is_sorted(t.vertices.begin(), t.vertices.end()) ||
      std::adjacent_find(t.vertices.begin(), t.vertices.end()) != t.vertices.end())
    return "tree vertex list not sorted-unique";
  for (auto [a, b] : t.edges) {
    if (a >= b) return "tree edge not in (min,max) order";
    if (!t.contains_vertex(a) || !t.contains_vertex(b))
      return "tree edge endpoint outside the tree";
    if (!host.has_edge(a, b)) return "tree edge missing from the host";
  }
  if (!std::is_sorted(t.edges.begin(), t.edges.end()) ||
      std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end())
    return "tree edge list not sorted-unique";
  if (t.edges.size() + 1 != t.vertices.size()) return "tree edge count is not |V|-1";
  // Connectivity over tree edges.
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen{t.vertices[0]};
  std::vector<int> stack{t.vertices[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (seen.insert(v).second) stack.push_back(v);
  }
  if (seen.size() != t.vertices.size()) return "tree not connected";
  return std::nullopt;
}

// Path endpoints if t is a path; a single vertex yields (v, v).
std::optional<std::pair<int, int>> path_endpoints(const SubTree& t) {
  if (t.vertices.size() == 1) return std::make_pair(t.vertices[0], t.vertices[0]);
  std::map<int, int> deg;
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<int> leaves;
  for (int v : t.vertices) {
    if (deg[v] > 2) return std::nullopt;
    if (deg[v] == 1) leaves.push_back(v);
  }
  if (leaves.size() != 2) return std::nullopt;
  return std::make_pair(std::min(leaves[0], leaves[1]), std::max(leaves[0], leaves[1]));
}

}  // namespace

ReconstructionReport validate_reconstruction(const Graph& g, const Reconstruction& r) {
  ReconstructionReport rep;
  std::ostringstream detail;

  // Structural layer: total phi, valid distinct subtrees.
  rep.structural = true;
  if (static_cast<int>(r.phi.size()) != g.vertex_count()) {
    rep.structural = false;
    detail << "phi is not total on V(G); ";
  } else {
    for (int img : r.phi)
      if (img < 0 || img >= r.host.vertex_count()) {
        rep.structural = false;
        detail << "phi image out of host range; ";
        break;
      }
  }
  for (std::size_t i = 0; i < r.trees.size() && rep.structural; ++i) {
    if (auto defect = check_subtree(r.host, r.trees[i])) {
      rep.structural = false;
      detail << "tree " << i << ": " << *defect << "; ";
    }
  }
  if (rep.structural) {
    for (std::size_t i = 0; i < r.trees.size(); ++i)
      for (std::size_t j = i + 1; j < r.trees.size(); ++j)
        if (r.trees[i] == r.trees[j]) {
          rep.structural = false;
          detail << "trees " << i << " and " << j << " are identical; ";
        }
  }
  if (!rep.structural) {
    rep.detail = detail.str();
    return rep;
  }

  int n = g.vertex_count();

  rep.p1 = true;
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const SubTree& t : r.trees)
      if (t.contains_vertex(r.phi[u]) && t.contains_vertex(r.phi[v])) {
        found = true;
        break;
      }
    if (!found) {
      rep.p1 = false;
      detail << "p1: edge " << u << "-" << v << " has no witnessing tree; ";
      break;
    }
  }

  rep.p2 = true;
  for (int u = 0; u < n && rep.p2; ++u)
    for (int v = u + 1; v < n && rep.p2; ++v) {
      if (g.has_edge(u, v)) continue;
      for (std::size_t i = 0; i < r.trees.size(); ++i) {
        const SubTree& t = r.trees[i];
        if (!t.contains_vertex(r.phi[u]) || !t.contains_vertex(r.phi[v])) continue;
        auto ends = path_endpoints(t);
        std::pair<int, int> want{std::min(r.phi[u], r.phi[v]),
                                 std::max(r.phi[u], r.phi[v])};
        if (r.phi[u] == r.phi[v] || !ends || *ends != want) {
          rep.p2 = false;
          detail << "p2: tree " << i << " fails for non-adjacent " << u << "," << v
                 << "; ";
          break;
        }
      }
    }

  // Direct property-3 test: group witnessing trees by the image of the
  // pair member; two distinct trees for one image is a violation.
  rep.p3 = true;
  std::map<int, std::set<std::size_t>> trees_by_image;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> incidences;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      for (std::size_t i = 0; i < r.trees.size(); ++i)
        if (r.trees[i].contains_vertex(r.phi[u]) &&
            r.trees[i].contains_vertex(r.phi[v])) {
          trees_by_image[r.phi[u]].insert(i);
          trees_by_image[r.phi[v]].insert(i);
          incidences.push_back({{u, v}, i});
        }
    }
  for (const auto& [img, trees] : trees_by_image)
    if (trees.size() > 1) {
      rep.p3 = false;
      detail << "p3: image " << img << " witnesses " << trees.size()
             << " distinct trees; ";
      break;
    }

  rep.p4 = true;
  for (int h = 0; h < r.host.vertex_count(); ++h) {
    if (r.host.degree(h) < 3) continue;
    int count = 0;
    for (const SubTree& t : r.trees)
      if (t.contains_vertex(h)) ++count;
    if (count > 1) {
      rep.p4 = false;
      detail << "p4: host vertex " << h << " of degree " << r.host.degree(h) << " is in "
             << count << " trees; ";
      break;
    }
  }

  // Reformulated test: unique witnessing tree per fuzzy pair, and endpoint
  // image sets pairwise equal or disjoint.
  rep.p3_prime = true;
  std::map<std::pair<int, int>, std::set<std::size_t>> by_pair;
  for (const auto& [pair, tree] : incidences) by_pair[pair].insert(tree);
  for (const auto& [pair, trees] : by_pair)
    if (trees.size() != 1) rep.p3_prime = false;
  std::vector<std::pair<int, int>> image_sets;
  for (const auto& [pair, trees] : by_pair) {
    image_sets.push_back({std::min(r.phi[pair.first], r.phi[pair.second]),
                          std::max(r.phi[pair.first], r.phi[pair.second])});
  }
  for (std::size_t i = 0; i < image_sets.size() && rep.p3_prime; ++i)
    for (std::size_t j = i + 1; j < image_sets.size(); ++j) {
      auto [a1, b1] = image_sets[i];
      auto [a2, b2] = image_sets[j];
      bool equal = a1 == a2 && b1 == b2;
      bool disjoint = a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2;
      if (!equal && !disjoint) {
        rep.p3_prime = false;
        break;
      }
    }

  if (rep.p1 && rep.p2 && rep.p4 && rep.p3 != rep.p3_prime) {
    rep.p3_disagreement = true;
    detail << "alarm: direct and reformulated property-3 tests disagree; ";
  }

  rep.detail = detail.str();
  return rep;
}

std::vector<FuzzyPair> fuzzy_pairs(const Graph& g, const Reconstruction& r) {
  ReconstructionReport rep = validate_reconstruction(g, r);
  if (!rep.ok())
    throw DomainError("fuzzy_pairs: reconstruction invalid: " + rep.detail);
  std::vector<FuzzyPair> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      int tree = -1;
      for (std::size_t i = 0; i < r.trees.size(); ++i)
        if (r.trees[i].contains_vertex(r.phi[u]) &&
            r.trees[i].contains_vertex(r.phi[v])) {
          if (tree != -1)
            throw InvariantViolation("fuzzy pair with two witnessing trees");
          tree = static_cast<int>(i);
        }
      if (tree != -1) out.push_back({u, v, tree});
    }
  // Endpoint image sets must be pairwise equal or disjoint.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      std::pair<int, int> s1{std::min(r.phi[out[i].a], r.phi[out[i].b]),
                             std::max(r.phi[out[i].a], r.phi[out[i].b])};
      std::pair<int, int> s2{std::min(r.phi[out[j].a], r.phi[out[j].b]),
                             std::max(r.phi[out[j].a], r.phi[out[j].b])};
      bool equal = s1 == s2;
      bool disjoint = s1.first != s2.first && s1.first != s2.second &&
                      s1.second != s2.first && s1.second != s2.second;
      if (!equal && !disjoint)
        throw InvariantViolation("fuzzy endpoint image sets neither equal nor disjoint");
    }
  return out;
}

namespace {

// Edges of `t` reachable from `h` when entering along edge {h,e_to}.
std::vector<std::pair<int, int>> branch_edges(const SubTree& t, int h, int e_to) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::pair<int, int>> out{{std::min(h, e_to), std::max(h, e_to)}};
  std::set<int> seen{h, e_to};
  std::vector<int> stack{e_to};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (seen.count(v)) continue;
      seen.insert(v);
      out.push_back({std::min(u, v), std::max(u, v)});
      stack.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int tree_at_core(const Reconstruction& r, int h, int e_to) {
  if (!r.host.has_edge(h, e_to))
    throw DomainError("tree_at: {" + std::to_string(h) + "," + std::to_string(e_to) +
                      "} is not a host edge");
  std::vector<std::pair<int, int>> need;
  bool any = false;
  for (const SubTree& t : r.trees) {
    if (!t.contains_edge(h, e_to)) continue;
    any = true;
    for (auto e : branch_edges(t, h, e_to)) need.push_back(e);
  }
  if (!any)
    throw InvariantViolation("tree_at: no tree contains the host edge {" +
                             std::to_string(h) + "," + std::to_string(e_to) + "}");
  std::sort(need.begin(), need.end());
  need.erase(std::unique(need.begin(), need.end()), need.end());
  int winner = -1;
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    if (std::includes(r.trees[i].edges.begin(), r.trees[i].edges.end(), need.begin(),
                      need.end()))
      {
        if (winner != -1)
          throw InvariantViolation("tree_at: containing tree is not unique");
        winner = static_cast<int>(i);
      }
  }
  if (winner == -1)
    throw InvariantViolation("tree_at: no tree contains every required path");
  return winner;
}

}  // namespace

int tree_at(const Reconstruction& r, int h, int e_to) {
  int winner = tree_at_core(r, h, e_to);
  // Leaf symmetry: the same tree is reached from each of its leaves.
  const SubTree& t = r.trees[winner];
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int v : t.vertices)
    if (adj[v].size() == 1 && tree_at_core(r, v, adj[v][0]) != winner)
      throw InvariantViolation("tree_at: leaf symmetry violated");
  return winner;
}

QuasilineCheck is_quasiline(const Graph& g) {
  QuasilineCheck out;
  out.ok = true;
  out.partitions.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.partitions[v] = is_cobipartite(g, g.neighbors(v));
    if (!out.partitions[v] && out.ok) {
      out.ok = false;
      out.failing_vertex = v;
    }
  }
  return out;
}

}  // namespace cpnum
