#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

}  // namespace

CliqueSequence fuzzy_incremental_cover(const Graph& g, const Reconstruction& r,
                                       const FuzzyPair& f) {
  PleasantReport prep = validate_pleasant(g, r);
  if (!prep.ok())
    throw DomainError("fuzzy_incremental_cover: reconstruction not pleasant: " +
                      prep.detail);
  std::vector<FuzzyPair> fps = fuzzy_pairs(g, r);
  bool known = false;
  for (const FuzzyPair& e : fps)
    if (e.a == f.a && e.b == f.b && e.tree == f.tree) known = true;
  if (!known) throw DomainError("fuzzy_incremental_cover: pair is not fuzzy here");

  const SubTree& t = r.trees[f.tree];
  std::vector<int> class_a = r.preimages(r.phi[f.a]);
  std::vector<int> class_b = r.preimages(r.phi[f.b]);
  if (class_a.size() < 2 || class_b.size() < 2)
    throw InvariantViolation("pleasant reconstruction with a singleton fuzzy class");

  auto clique2 = [&](int w) {
    Clique s{w};
    for (int x : g.neighbors(w))
      if (r.phi[x] != r.phi[w] && t.contains_vertex(r.phi[x])) s.push_back(x);
    std::sort(s.begin(), s.end());
    return s;
  };
  auto clique1 = [&](int w) {
    Clique s2 = clique2(w);
    Clique s{w};
    for (int x : g.neighbors(w))
      if (!std::binary_search(s2.begin(), s2.end(), x)) s.push_back(x);
    std::sort(s.begin(), s.end());
    return s;
  };

  // Same-image vertices share the first clique; checked for both classes.
  for (const std::vector<int>* cls : {&class_a, &class_b})
    for (int w : *cls)
      if (clique1(w) != clique1((*cls)[0]))
        throw InvariantViolation("first cliques differ within an image class");

  CliqueSequence out;
  out.cliques.push_back(clique1(f.a));
  out.cliques.push_back(clique2(f.a));
  for (int w : class_a)
    if (w != f.a) out.cliques.push_back(clique2(w));
  out.cliques.push_back(clique1(f.b));
  for (const Clique& c : out.cliques)
    if (!is_clique(g, c))
      throw InvariantViolation("fuzzy cover produced a non-clique " + vec_str(c));
  out.target = class_a;
  out.target.insert(out.target.end(), class_b.begin(), class_b.end());
  std::sort(out.target.begin(), out.target.end());

  VerifyResult check = verify_incremental_cover(g, out);
  if (!check)
    throw InvariantViolation("fuzzy cover failed incremental verification: " +
                             check.report);
  return out;
}

CliquePairAssignment clique_pair_assignment(const Graph& g, const Reconstruction& r) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_simplicial(g, v))
      throw DomainError("clique_pair_assignment: vertex " + std::to_string(v) +
                        " is simplicial");
  PleasantReport prep = validate_pleasant(g, r);
  if (!prep.ok())
    throw DomainError("clique_pair_assignment: reconstruction not pleasant: " +
                      prep.detail);
  if (!fuzzy_pairs(g, r).empty())
    throw DomainError("clique_pair_assignment: reconstruction still has fuzzy pairs");

  CliquePairAssignment out;
  out.cliques.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int img = r.phi[v];
    if (r.host.degree(img) != 2)
      throw InvariantViolation("image of non-simplicial vertex " + std::to_string(v) +
                               " has host degree " + std::to_string(r.host.degree(img)));
    const std::vector<int>& hn = r.host.neighbors(img);
    for (int side = 0; side < 2; ++side) {
      const SubTree& t = r.trees[tree_at(r, img, hn[side])];
      Clique c;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (t.contains_vertex(r.phi[w])) c.push_back(w);
      if (!is_clique(g, c))
        throw InvariantViolation("tree preimage is not a clique: " + vec_str(c));
      out.cliques[v][side] = std::move(c);
    }
    const Clique& c1 = out.cliques[v][0];
    const Clique& c2 = out.cliques[v][1];
    for (int x : g.neighbors(v))
      if (!std::binary_search(c1.begin(), c1.end(), x) &&
          !std::binary_search(c2.begin(), c2.end(), x))
        throw InvariantViolation("assignment misses edge " + std::to_string(v) + "-" +
                                 std::to_string(x));
  }
  // Sharing: every clique value appears for a second vertex.
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int side = 0; side < 2; ++side) {
      bool shared = false;
      for (int w = 0; w < g.vertex_count() && !shared; ++w) {
        if (w == v) continue;
        shared = out.cliques[w][0] == out.cliques[v][side] ||
                 out.cliques[w][1] == out.cliques[v][side];
      }
      if (!shared)
        throw InvariantViolation("clique of vertex " + std::to_string(v) +
                                 " is not shared");
    }
  return out;
}

CliqueSequence bipartite_cycle_cover(const Graph& g, const CliquePairAssignment& a) {
  int n = g.vertex_count();
  if (static_cast<int>(a.cliques.size()) != n)
    throw DomainError("bipartite_cycle_cover: assignment size mismatch");
  std::map<Clique, int> clique_id;
  std::vector<Clique> clique_of;
  auto intern = [&](const Clique& c) {
    auto it = clique_id.find(c);
    if (it != clique_id.end()) return it->second;
    int id = static_cast<int>(clique_of.size());
    clique_id.emplace(c, id);
    clique_of.push_back(c);
    return id;
  };
  std::vector<std::array<int, 2>> of_vertex(n);
  for (int v = 0; v < n; ++v) {
    const Clique& c1 = a.cliques[v][0];
    const Clique& c2 = a.cliques[v][1];
    if (!is_clique(g, c1) || !is_clique(g, c2))
      throw DomainError("bipartite_cycle_cover: assignment contains a non-clique");
    if (c1 == c2)
      throw DomainError("bipartite_cycle_cover: vertex " + std::to_string(v) +
                        " has a single clique");
    for (int x : g.neighbors(v))
      if (!std::binary_search(c1.begin(), c1.end(), x) &&
          !std::binary_search(c2.begin(), c2.end(), x))
        throw DomainError("bipartite_cycle_cover: assignment misses an edge at " +
                          std::to_string(v));
    of_vertex[v] = {intern(c1), intern(c2)};
  }
  int k = static_cast<int>(clique_of.size());
  std::vector<std::vector<int>> members(k);  // clique id -> vertices using it
  for (int v = 0; v < n; ++v) {
    members[of_vertex[v][0]].push_back(v);
    members[of_vertex[v][1]].push_back(v);
  }
  for (int c = 0; c < k; ++c)
    if (members[c].size() < 2)
      throw DomainError("bipartite_cycle_cover: clique " + vec_str(clique_of[c]) +
                        " is used by fewer than two vertices");

  // Shortest clique-to-clique path avoiding v closes the cycle through v.
  for (int v = 0; v < n; ++v) {
    int source = of_vertex[v][0], sink = of_vertex[v][1];
    // BFS over alternating clique/vertex nodes; vertices encoded as k+v.
    std::vector<int> parent(k + n, -2);
    parent[source] = -1;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[sink] == -2) {
      int x = q.front();
      q.pop();
      if (x < k) {
        for (int w : members[x]) {
          if (w == v || parent[k + w] != -2) continue;
          parent[k + w] = x;
          q.push(k + w);
        }
      } else {
        int w = x - k;
        for (int c : of_vertex[w])
          if (parent[c] == -2) {
            parent[c] = x;
            q.push(c);
          }
      }
    }
    if (parent[sink] == -2) continue;
    std::vector<int> nodes;  // sink..source alternating, then close with v
    for (int x = sink; x != -1; x = parent[x]) nodes.push_back(x);
    std::reverse(nodes.begin(), nodes.end());  // source ... sink
    CliqueSequence out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i % 2 == 0)
        out.cliques.push_back(clique_of[nodes[i]]);
      else
        out.target.push_back(nodes[i] - k);
    }
    out.target.push_back(v);  // closes sink -> v -> source
    std::sort(out.target.begin(), out.target.end());
    VerifyResult check = verify_incremental_cover(g, out);
    if (!check)
      throw InvariantViolation("cycle cover failed incremental verification: " +
                               check.report);
    return out;
  }
  throw InvariantViolation("no cycle in a bipartite incidence graph of minimum degree 2");
}

OpsutReport opsut_witness(const Graph& g, const Reconstruction& r0) {
  ReconstructionReport rep = validate_reconstruction(g, r0);
  if (!rep.ok()) throw DomainError("opsut_witness: reconstruction invalid: " + rep.detail);
  if (!is_quasiline(g).ok) throw DomainError("opsut_witness: graph is not quasi-line");

  OpsutReport report;
  std::vector<Clique> seq;
  Graph cur = g;
  Reconstruction rcur = r0;
  std::vector<int> to_orig(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) to_orig[v] = v;

  while (cur.vertex_count() > 0) {
    std::vector<Clique> part;
    std::vector<int> covered;
    int simplicial = -1;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (is_simplicial(cur, v)) {
        simplicial = v;
        break;
      }
    if (simplicial >= 0) {
      Clique c = cur.neighbors(simplicial);
      c.push_back(simplicial);
      std::sort(c.begin(), c.end());
      part.push_back(c);
      covered = {simplicial};
      report.stages.push_back("simplicial:v=" + std::to_string(to_orig[simplicial]));
    } else {
      Reconstruction rp = pleasantify(cur, rcur);
      std::vector<FuzzyPair> fps = fuzzy_pairs(cur, rp);
      if (!fps.empty()) {
        CliqueSequence cs = fuzzy_incremental_cover(cur, rp, fps.front());
        part = cs.cliques;
        covered = cs.target;
        report.stages.push_back("fuzzy:pair={" + std::to_string(to_orig[fps.front().a]) +
                                "," + std::to_string(to_orig[fps.front().b]) + "} covered=" +
                                std::to_string(covered.size()));
      } else {
        CliquePairAssignment asg = clique_pair_assignment(cur, rp);
        CliqueSequence cs = bipartite_cycle_cover(cur, asg);
        part = cs.cliques;
        covered = cs.target;
        report.stages.push_back("cycle:length=" + std::to_string(part.size()));
      }
      rcur = rp;
    }

    for (const Clique& c : part) {
      Clique mapped;
      for (int v : c) mapped.push_back(to_orig[v]);
      std::sort(mapped.begin(), mapped.end());
      seq.push_back(mapped);
    }

    std::vector<int> remaining;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (!std::binary_search(covered.begin(), covered.end(), v)) remaining.push_back(v);
    InducedSubgraph sub = induced_subgraph(cur, remaining);

    // Restrict the reconstruction: drop the peeled vertices from phi, keep
    // host and trees, then tidy the tree family.
    Reconstruction restricted;
    restricted.host = rcur.host;
    restricted.trees = rcur.trees;
    for (int v : remaining) restricted.phi.push_back(rcur.phi[v]);
    ReconstructionReport rcheck = validate_reconstruction(sub.graph, restricted);
    if (!rcheck.ok())
      throw InvariantViolation(
          "restriction of the reconstruction failed validation (no generator model "
          "available to re-derive from): " +
          rcheck.detail);
    restricted = normalize_trees(sub.graph, restricted);
    report.stages.push_back("peel:branch=restriction remaining=" +
                            std::to_string(remaining.size()));

    std::vector<int> next_map;
    for (int v : remaining) next_map.push_back(to_orig[v]);
    to_orig = std::move(next_map);
    cur = sub.graph;
    rcur = std::move(restricted);
  }

  CliqueSequence full;
  full.cliques = seq;
  full.target.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) full.target[v] = v;
  VerifyResult check = verify_incremental_cover(g, full);
  if (!check)
    throw InvariantViolation("concatenated cover failed incremental verification: " +
                             check.report);

  LMCover lm = incremental_to_lm(g, full);
  CpWitness w = dag_from_lm_cover(g, lm);
  w.trail = report.stages;
  w.trail.push_back("convert:incremental->ordered-cover->dag added=2");
  VerifyResult final_check = verify_cp_witness(g, w);
  if (!final_check)
    throw InvariantViolation("opsut witness failed verification: " + final_check.report);
  if (w.added > 2) throw InvariantViolation("opsut witness exceeded two added vertices");
  report.witness = std::move(w);
  report.cover = std::move(full);
  return report;
}

}  // namespace cpnum
