#include <algorithm>
#include <climits>
#include <queue>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"
#include "cpnum/holes.hpp"

namespace cpnum {

namespace {

constexpr int kInf = 1 << 24;

struct MaxFlow {
  int n;
  std::vector<std::vector<int>> cap;
  explicit MaxFlow(int n) : n(n), cap(n, std::vector<int>(n, 0)) {}
  void add(int u, int v, int c) { cap[u][v] += c; }
  int run(int s, int t) {
    int flow = 0;
    for (;;) {
      std::vector<int> par(n, -1);
      par[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && par[t] == -1) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
          if (par[v] == -1 && cap[u][v] > 0) {
            par[v] = u;
            q.push(v);
          }
      }
      if (par[t] == -1) break;
      int b = INT_MAX;
      for (int v = t; v != s; v = par[v]) b = std::min(b, cap[par[v]][v]);
      for (int v = t; v != s; v = par[v]) {
        cap[par[v]][v] -= b;
        cap[v][par[v]] += b;
      }
      flow += b;
    }
    return flow;
  }
  std::vector<bool> residual_reach(int s) const {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (!seen[v] && cap[u][v] > 0) {
          seen[v] = true;
          q.push(v);
        }
    }
    return seen;
  }
};

// Minimum vertex s-t cut via the split-vertex digraph.
std::vector<int> min_vertex_cut(const Graph& g, int s, int t) {
  int n = g.vertex_count();
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  MaxFlow f(2 * n);
  for (int v = 0; v < n; ++v) f.add(in(v), out(v), (v == s || v == t) ? kInf : 1);
  for (auto [u, v] : g.edges()) {
    f.add(out(u), in(v), kInf);
    f.add(out(v), in(u), kInf);
  }
  f.run(out(s), in(t));
  std::vector<bool> reach = f.residual_reach(out(s));
  std::vector<int> cut;
  for (int v = 0; v < n; ++v)
    if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
  return cut;
}

// One good vertex on the `side` half of the separation, by the clique-filled
// recursion.
int good_from_side(const Graph& g, const std::vector<int>& separator,
                   const std::vector<int>& side) {
  std::vector<int> verts = side;
  verts.insert(verts.end(), separator.begin(), separator.end());
  InducedSubgraph sub = induced_subgraph(g, verts);
  Graph filled = sub.graph;
  for (std::size_t i = 0; i < separator.size(); ++i)
    for (std::size_t j = i + 1; j < separator.size(); ++j) {
      int a = sub.from_parent[separator[i]], b = sub.from_parent[separator[j]];
      if (!filled.has_edge(a, b)) filled.add_edge(a, b);
    }
  std::set<int> side_set(side.begin(), side.end());
  if (is_complete(filled)) {
    for (int v : side)
      return v;  // sorted ascending; the minimum side vertex is good
  } else {
    auto [x, y] = find_two_good_vertices(filled);
    int px = sub.to_parent[x], py = sub.to_parent[y];
    bool xin = side_set.count(px), yin = side_set.count(py);
    if (xin && yin) return std::min(px, py);
    if (xin) return px;
    if (yin) return py;
    throw InvariantViolation(
        "separator recursion returned no good vertex on the open side");
  }
  throw InvariantViolation("good_from_side: empty side");
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

}  // namespace

std::pair<int, int> find_two_good_vertices(const Graph& g) {
  if (is_complete(g)) throw DomainError("find_two_good_vertices: graph is complete");
  int n = g.vertex_count();

  std::vector<int> separator, side_a, side_b;
  std::vector<std::vector<int>> comps = connected_components(g);
  if (comps.size() > 1) {
    side_a = comps[0];
    for (std::size_t c = 1; c < comps.size(); ++c)
      side_b.insert(side_b.end(), comps[c].begin(), comps[c].end());
    std::sort(side_b.begin(), side_b.end());
  } else {
    int best = INT_MAX, ba = -1, bb = -1;
    std::vector<int> best_cut;
    for (int a = 0; a < n && best > 0; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        std::vector<int> cut = min_vertex_cut(g, a, b);
        if (static_cast<int>(cut.size()) < best) {
          best = static_cast<int>(cut.size());
          best_cut = cut;
          ba = a;
          bb = b;
        }
      }
    if (ba < 0) throw InvariantViolation("connected non-complete graph has a non-edge");
    separator = best_cut;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!std::count(separator.begin(), separator.end(), v)) rest.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, rest);
    std::vector<std::vector<int>> parts = connected_components(sub.graph);
    std::set<int> a_side;
    for (const std::vector<int>& part : parts)
      if (std::count(part.begin(), part.end(), sub.from_parent[ba]))
        for (int w : part) a_side.insert(sub.to_parent[w]);
    for (int v : rest)
      (a_side.count(v) ? side_a : side_b).push_back(v);
    (void)bb;
  }

  int va = good_from_side(g, separator, side_a);
  int vb = good_from_side(g, separator, side_b);
  if (g.has_edge(va, vb))
    throw InvariantViolation("separated good vertices turned out adjacent");
  if (!is_good_vertex(g, va) || !is_good_vertex(g, vb))
    throw InvariantViolation("separator recursion produced a non-good vertex");
  return {std::min(va, vb), std::max(va, vb)};
}

CpWitness extend_dag_with_vertex(const CpWitness& w_minus_v, const Graph& g, int v,
                                 const DefectReport& r) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw DomainError("extend_dag_with_vertex: vertex out of range");
  std::vector<int> rest;
  for (int w = 0; w < n; ++w)
    if (w != v) rest.push_back(w);
  InducedSubgraph sub = induced_subgraph(g, rest);
  VerifyResult check = verify_cp_witness(sub.graph, w_minus_v);
  if (!check)
    throw DomainError("extend_dag_with_vertex: witness for G-v does not verify: " +
                      check.report);
  if (w_minus_v.added < 1)
    throw DomainError("extend_dag_with_vertex: witness must have added >= 1");
  if (r.vertex != v) throw DomainError("extend_dag_with_vertex: defect report is for " +
                                       std::to_string(r.vertex) + ", not " +
                                       std::to_string(v));
  {
    std::vector<int> nv = g.neighbors(v);
    std::vector<int> merged = r.witness_clique;
    merged.insert(merged.end(), r.leftover.begin(), r.leftover.end());
    std::sort(merged.begin(), merged.end());
    if (merged != nv || !is_clique(g, r.witness_clique) ||
        r.defect != static_cast<int>(r.leftover.size()))
      throw DomainError("extend_dag_with_vertex: defect report inconsistent with G");
  }

  // Normalize: make sure one added vertex has no out-arcs. Stripping the
  // out-arcs of an added vertex never changes the competition graph, since
  // a verified added vertex competes with nobody; the removal is re-verified.
  CpWitness w = w_minus_v;
  int nm = n - 1;
  int u_old = -1;
  for (int a = nm; a < nm + w.added; ++a)
    if (w.dag.out_neighbors(a).empty()) {
      u_old = a;
      break;
    }
  if (u_old == -1) {
    u_old = nm;
    Digraph trimmed(w.dag.vertex_count());
    for (auto [x, y] : w.dag.arcs())
      if (x != u_old) trimmed.add_arc(x, y);
    w.dag = trimmed;
    w.trail.push_back("normalize:dropped out-arcs of added vertex " +
                      std::to_string(u_old));
    VerifyResult recheck = verify_cp_witness(sub.graph, w);
    if (!recheck)
      throw InvariantViolation("normalization broke the witness: " + recheck.report);
  }

  // Old dag ids -> ids in the extended witness.
  auto remap = [&](int w_id) {
    if (w_id < nm) return w_id < v ? w_id : w_id + 1;
    return n + (w_id - nm);
  };
  int u = remap(u_old);
  int total = n + w.added + r.defect;
  Digraph d(total);
  for (auto [x, y] : w.dag.arcs()) {
    int xx = remap(x), yy = remap(y);
    d.add_arc(xx, yy == u ? v : yy);  // redirect former u-arcs into v
  }
  for (int c : r.witness_clique) d.add_arc(c, u);
  d.add_arc(v, u);
  for (int i = 0; i < r.defect; ++i) {
    int fresh = n + w.added + i;
    d.add_arc(v, fresh);
    d.add_arc(r.leftover[i], fresh);
  }

  CpWitness out{g, std::move(d), w.added + r.defect, w.trail};
  out.trail.push_back("extend:v=" + std::to_string(v) + " clique=" +
                      vec_str(r.witness_clique) + " leftover=" + vec_str(r.leftover) +
                      " prey=" + std::to_string(u));
  VerifyResult final_check = verify_cp_witness(g, out);
  if (!final_check)
    throw InvariantViolation("extended witness failed verification: " +
                             final_check.report);
  return out;
}

KimReport kim_witness(const Graph& g, std::size_t hole_limit) {
  KimReport report;
  report.hole_count = enumerate_holes(g, hole_limit).size();
  report.hole_dim = hole_space_dim(g, hole_limit);

  if (g.vertex_count() == 0) {
    report.witness = CpWitness{g, Digraph(0), 0, {"base:empty"}};
    return report;
  }

  // Peel good vertices down to a single vertex.
  std::vector<Graph> chain{g};
  std::vector<int> peeled;
  std::vector<DefectReport> defects;
  while (chain.back().vertex_count() > 1) {
    const Graph& cur = chain.back();
    auto [v, cert] = find_good_vertex(cur);
    DefectReport dr = simplicial_defect(cur, v);
    int hv = holes_at(cur, v, hole_limit);
    if (dr.defect > hv)
      throw InvariantViolation("peeled good vertex " + std::to_string(v) +
                               " has defect " + std::to_string(dr.defect) +
                               " exceeding its hole count " + std::to_string(hv));
    report.peels.push_back({v, dr.defect, hv});
    peeled.push_back(v);
    defects.push_back(dr);
    std::vector<int> rest;
    for (int w = 0; w < cur.vertex_count(); ++w)
      if (w != v) rest.push_back(w);
    chain.push_back(induced_subgraph(cur, rest).graph);
  }

  // Base witness for a single vertex: one appended prey.
  Digraph base_dag(2);
  base_dag.add_arc(0, 1);
  CpWitness w{chain.back(), base_dag, 1, {"base:single-vertex"}};

  for (int i = static_cast<int>(peeled.size()) - 1; i >= 0; --i)
    w = extend_dag_with_vertex(w, chain[i], peeled[i], defects[i]);

  // Drop added vertices that never receive an arc, then re-verify.
  int n = g.vertex_count();
  std::vector<bool> has_in(w.dag.vertex_count(), false);
  for (auto [x, y] : w.dag.arcs()) has_in[y] = true;
  std::vector<int> keep;
  for (int a = n; a < w.dag.vertex_count(); ++a)
    if (has_in[a]) keep.push_back(a);
  if (static_cast<int>(keep.size()) < w.added) {
    std::vector<int> new_id(w.dag.vertex_count(), -1);
    for (int x = 0; x < n; ++x) new_id[x] = x;
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = n + static_cast<int>(i);
    Digraph compact(n + static_cast<int>(keep.size()));
    for (auto [x, y] : w.dag.arcs()) compact.add_arc(new_id[x], new_id[y]);
    w.dag = compact;
    w.trail.push_back("normalize:removed " +
                      std::to_string(w.added - static_cast<int>(keep.size())) +
                      " unused added vertices");
    w.added = static_cast<int>(keep.size());
    VerifyResult recheck = verify_cp_witness(g, w);
    if (!recheck)
      throw InvariantViolation("final normalization broke the witness: " +
                               recheck.report);
  }

  if (w.added > static_cast<int>(report.hole_count) + 1)
    throw InvariantViolation("witness exceeds the hole-count bound");
  if (w.added > report.hole_dim + 1)
    throw InvariantViolation("witness exceeds the hole-space bound");
  report.witness = std::move(w);
  return report;
}

}  // namespace cpnum
