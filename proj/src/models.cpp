#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

namespace {

// Point set of a closed interval walked forward (cyclically when wrap=true).
std::vector<int> interval_points(int points, std::pair<int, int> iv, bool wrap) {
  auto [s, e] = iv;
  if (s < 0 || e < 0 || s >= points || e >= points)
    throw DomainError("interval endpoint out of range");
  if (s == e) throw DomainError("trivial interval");
  std::vector<int> out;
  if (!wrap) {
    if (s > e) throw DomainError("linear interval must have start <= end");
    for (int p = s; p <= e; ++p) out.push_back(p);
  } else {
    for (int p = s;; p = (p + 1) % points) {
      out.push_back(p);
      if (p == e) break;
    }
  }
  return out;
}

struct ExpandedIntervals {
  std::vector<std::vector<int>> point_sets;       // walk order
  std::vector<std::set<int>> members;             // as sets
};

ExpandedIntervals expand_intervals(int points,
                                   const std::vector<std::pair<int, int>>& intervals,
                                   bool wrap) {
  ExpandedIntervals out;
  std::set<int> endpoints;
  for (auto iv : intervals) {
    std::vector<int> pts = interval_points(points, iv, wrap);
    out.point_sets.push_back(pts);
    out.members.emplace_back(pts.begin(), pts.end());
    if (!endpoints.insert(iv.first).second || !endpoints.insert(iv.second).second)
      throw DomainError("two intervals share an endpoint");
  }
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = 0; j < out.members.size(); ++j) {
      if (i == j) continue;
      if (std::includes(out.members[j].begin(), out.members[j].end(),
                        out.members[i].begin(), out.members[i].end()))
        throw DomainError("interval " + std::to_string(i) + " is contained in interval " +
                          std::to_string(j));
    }
  return out;
}

// The graph an interval model defines: vertices sharing an interval are
// adjacent unless listed as a fuzzy non-edge, which is only legal for pairs
// sitting on the two endpoint images of every common interval.
Graph graph_from_model(int points, const std::vector<int>& phi,
                       const std::vector<std::pair<int, int>>& intervals,
                       const ExpandedIntervals& ex,
                       const std::vector<std::pair<int, int>>& fuzzy_nonedges) {
  int n = static_cast<int>(phi.size());
  for (int img : phi)
    if (img < 0 || img >= points) throw DomainError("phi image out of range");
  std::set<std::pair<int, int>> fuzz;
  for (auto [u, v] : fuzzy_nonedges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw DomainError("fuzzy non-edge names an invalid pair");
    bool common = false;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (!ex.members[i].count(phi[u]) || !ex.members[i].count(phi[v])) continue;
      common = true;
      std::pair<int, int> ends{std::min(intervals[i].first, intervals[i].second),
                               std::max(intervals[i].first, intervals[i].second)};
      std::pair<int, int> imgs{std::min(phi[u], phi[v]), std::max(phi[u], phi[v])};
      if (ends != imgs)
        throw DomainError("fuzzy non-edge pair is not the endpoint pair of interval " +
                          std::to_string(i));
    }
    if (!common) throw DomainError("fuzzy non-edge without a common interval");
    fuzz.insert({std::min(u, v), std::max(u, v)});
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (fuzz.count({u, v})) continue;
      for (const auto& mem : ex.members)
        if (mem.count(phi[u]) && mem.count(phi[v])) {
          g.add_edge(u, v);
          break;
        }
    }
  return g;
}

// Host on the distinct image points plus the per-interval path trees.
Reconstruction host_from_model(int points, const std::vector<int>& phi,
                               const ExpandedIntervals& ex, bool wrap) {
  std::vector<int> image_points(phi.begin(), phi.end());
  std::sort(image_points.begin(), image_points.end());
  image_points.erase(std::unique(image_points.begin(), image_points.end()),
                     image_points.end());
  std::map<int, int> rank;
  for (std::size_t i = 0; i < image_points.size(); ++i)
    rank[image_points[i]] = static_cast<int>(i);
  int k = static_cast<int>(image_points.size());
  Graph host(k);
  if (k == 2) host.add_edge(0, 1);
  if (k >= 3) {
    for (int i = 0; i + 1 < k; ++i) host.add_edge(i, i + 1);
    if (wrap)
      host.add_edge(k - 1, 0);
  }
  Reconstruction r;
  r.phi.resize(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) r.phi[v] = rank[phi[v]];
  for (const std::vector<int>& pts : ex.point_sets) {
    std::vector<int> imgs;
    for (int p : pts)
      if (rank.count(p)) imgs.push_back(rank[p]);
    if (imgs.empty()) continue;
    SubTree t;
    t.vertices = imgs;
    for (std::size_t i = 0; i + 1 < imgs.size(); ++i) t.edges.push_back({imgs[i], imgs[i + 1]});
    t.canonicalize();
    r.trees.push_back(std::move(t));
  }
  r.host = std::move(host);
  std::sort(r.trees.begin(), r.trees.end());
  r.trees.erase(std::unique(r.trees.begin(), r.trees.end()), r.trees.end());
  (void)points;
  return r;
}

}  // namespace

ModelInstance reconstruction_from_circular_model(const CircularIntervalModel& m) {
  if (m.points < 1) throw DomainError("circular model needs at least one point");
  ExpandedIntervals ex = expand_intervals(m.points, m.intervals, /*wrap=*/true);
  Graph g = graph_from_model(m.points, m.phi, m.intervals, ex, m.fuzzy_nonedges);
  Reconstruction r = host_from_model(m.points, m.phi, ex, /*wrap=*/true);
  ReconstructionReport rep = validate_reconstruction(g, r);
  if (!rep.ok())
    throw InvariantViolation("circular model produced an invalid reconstruction: " +
                             rep.detail);
  return {std::move(g), std::move(r)};
}

StripInstance reconstruction_from_strip(const StripModel& m) {
  if (m.points < 2) throw DomainError("strip model needs at least two points");
  int n = static_cast<int>(m.phi.size());
  if (m.end_a < 0 || m.end_b < 0 || m.end_a >= n || m.end_b >= n || m.end_a == m.end_b)
    throw DomainError("strip ends must be two distinct vertices");
  for (int v = 0; v < n; ++v) {
    if (v != m.end_a && m.phi[v] == m.phi[m.end_a])
      throw DomainError("end a shares its image with vertex " + std::to_string(v));
    if (v != m.end_b && m.phi[v] == m.phi[m.end_b])
      throw DomainError("end b shares its image with vertex " + std::to_string(v));
  }
  ExpandedIntervals ex = expand_intervals(m.points, m.intervals, /*wrap=*/false);
  Graph g = graph_from_model(m.points, m.phi, m.intervals, ex, m.fuzzy_nonedges);
  if (!is_simplicial(g, m.end_a) || !is_simplicial(g, m.end_b))
    throw DomainError("strip ends are not simplicial");
  Reconstruction r = host_from_model(m.points, m.phi, ex, /*wrap=*/false);
  ReconstructionReport rep = validate_reconstruction(g, r);
  if (!rep.ok())
    throw InvariantViolation("strip model produced an invalid reconstruction: " +
                             rep.detail);

  // Alter the reconstruction until no end participates in a fuzzy pair.
  int guard = 0;
  for (;;) {
    if (++guard > 4 * n + 8)
      throw InvariantViolation("strip end alteration failed to converge");
    std::vector<FuzzyPair> fps = fuzzy_pairs(g, r);
    const FuzzyPair* hit = nullptr;
    int end = -1;
    for (const FuzzyPair& f : fps) {
      if (f.a == m.end_a || f.a == m.end_b) {
        hit = &f;
        end = f.a;
        break;
      }
      if (f.b == m.end_a || f.b == m.end_b) {
        hit = &f;
        end = f.b;
        break;
      }
    }
    if (!hit) break;
    int partner = hit->a == end ? hit->b : hit->a;
    std::vector<int> remap;
    for (int w : r.preimages(r.phi[partner]))
      if (g.has_edge(w, end)) remap.push_back(w);
    detail::split_fuzzy_tree(r, hit->tree, r.phi[partner], r.phi[end], remap);
    ReconstructionReport again = validate_reconstruction(g, r);
    if (!again.ok())
      throw InvariantViolation("strip end alteration broke the reconstruction: " +
                               again.detail);
  }

  for (int v = 0; v < n; ++v) {
    if (v != m.end_a && r.phi[v] == r.phi[m.end_a])
      throw InvariantViolation("alteration gave end a a shared image");
    if (v != m.end_b && r.phi[v] == r.phi[m.end_b])
      throw InvariantViolation("alteration gave end b a shared image");
  }
  for (int h = 0; h < r.host.vertex_count(); ++h)
    if (r.host.degree(h) > 2)
      throw InvariantViolation("strip host stopped being a path");
  return {std::move(g), std::move(r), m.end_a, m.end_b};
}

ModelInstance compose_strips(const StripComposition& c) {
  int n_strips = static_cast<int>(c.strips.size());
  int total = 2 * n_strips;
  if (static_cast<int>(c.pairs.size()) != n_strips)
    throw DomainError("composition needs one pair per strip");
  {
    std::vector<int> seen(total, 0);
    for (auto [a, b] : c.pairs) {
      if (a < 0 || b < 0 || a >= total || b >= total || a == b)
        throw DomainError("pairing names an invalid base vertex");
      ++seen[a];
      ++seen[b];
    }
    for (int v = 0; v < total; ++v)
      if (seen[v] != 1) throw DomainError("pairing must cover every base vertex once");
    std::vector<int> part(total, 0);
    for (const auto& cl : c.g0_cliques)
      for (int v : cl) {
        if (v < 0 || v >= total) throw DomainError("base clique vertex out of range");
        ++part[v];
      }
    for (int v = 0; v < total; ++v)
      if (part[v] != 1) throw DomainError("base cliques must partition the base vertices");
  }

  std::vector<StripInstance> strips;
  strips.reserve(n_strips);
  for (const StripModel& m : c.strips) strips.push_back(reconstruction_from_strip(m));

  // Iterative composition of the underlying graphs. Vertices are tagged as
  // base vertices or strip interiors until every base vertex is consumed.
  struct Tag {
    int strip;  // -1 for base vertices
    int id;     // base vertex id, or local strip vertex id
    bool operator<(const Tag& o) const {
      return strip != o.strip ? strip < o.strip : id < o.id;
    }
    bool operator==(const Tag& o) const { return strip == o.strip && id == o.id; }
  };
  std::vector<Tag> verts;
  std::set<std::pair<int, int>> cur_edges;  // indices into verts
  for (int v = 0; v < total; ++v) verts.push_back({-1, v});
  auto index_of = [&](Tag t) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == t) return static_cast<int>(i);
    throw InvariantViolation("composition lost a vertex");
  };
  for (const auto& cl : c.g0_cliques)
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        int a = index_of({-1, cl[i]}), b = index_of({-1, cl[j]});
        cur_edges.insert({std::min(a, b), std::max(a, b)});
      }

  for (int i = 0; i < n_strips; ++i) {
    int pa = index_of({-1, c.pairs[i].first});
    int pb = index_of({-1, c.pairs[i].second});
    auto nbrs = [&](int x, int skip) {
      std::vector<int> out;
      for (auto [a, b] : cur_edges) {
        if (a == x && b != skip) out.push_back(b);
        if (b == x && a != skip) out.push_back(a);
      }
      return out;
    };
    std::vector<int> side_a = nbrs(pa, pb), side_b = nbrs(pb, pa);

    const StripInstance& st = strips[i];
    std::vector<int> interiors;
    for (int v = 0; v < st.graph.vertex_count(); ++v)
      if (v != st.end_a && v != st.end_b) interiors.push_back(v);
    std::vector<int> prime_a, prime_b;  // interiors adjacent to the ends
    for (int v : interiors) {
      if (st.graph.has_edge(v, st.end_a)) prime_a.push_back(v);
      if (st.graph.has_edge(v, st.end_b)) prime_b.push_back(v);
    }

    // Rebuild the vertex list without pa, pb and with this strip's interior.
    std::vector<Tag> next_verts;
    std::vector<int> old_to_new(verts.size(), -1);
    for (std::size_t x = 0; x < verts.size(); ++x) {
      if (static_cast<int>(x) == pa || static_cast<int>(x) == pb) continue;
      old_to_new[x] = static_cast<int>(next_verts.size());
      next_verts.push_back(verts[x]);
    }
    std::map<int, int> local_to_new;
    for (int v : interiors) {
      local_to_new[v] = static_cast<int>(next_verts.size());
      next_verts.push_back({i, v});
    }
    std::set<std::pair<int, int>> next_edges;
    for (auto [a, b] : cur_edges) {
      if (old_to_new[a] < 0 || old_to_new[b] < 0) continue;
      int x = old_to_new[a], y = old_to_new[b];
      next_edges.insert({std::min(x, y), std::max(x, y)});
    }
    for (auto [u, v] : st.graph.edges()) {
      if (!local_to_new.count(u) || !local_to_new.count(v)) continue;
      int x = local_to_new[u], y = local_to_new[v];
      next_edges.insert({std::min(x, y), std::max(x, y)});
    }
    for (int a : side_a)
      for (int v : prime_a) {
        int x = old_to_new[a], y = local_to_new[v];
        next_edges.insert({std::min(x, y), std::max(x, y)});
      }
    for (int b : side_b)
      for (int v : prime_b) {
        int x = old_to_new[b], y = local_to_new[v];
        next_edges.insert({std::min(x, y), std::max(x, y)});
      }
    verts = std::move(next_verts);
    cur_edges = std::move(next_edges);
  }

  // Final ids sorted by (strip, local id).
  std::vector<int> perm(verts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return verts[x] < verts[y]; });
  std::vector<int> place(verts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) place[perm[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(verts.size()));
  for (auto [a, b] : cur_edges) {
    int x = place[a], y = place[b];
    if (!g.has_edge(x, y)) g.add_edge(x, y);
  }
  std::vector<Tag> order(verts.size(), Tag{-2, -2});
  for (std::size_t i = 0; i < verts.size(); ++i) order[place[i]] = verts[i];

  // Host: disjoint strip hosts plus a clique on the end images of every
  // base-graph edge.
  std::vector<int> offset(n_strips, 0);
  int host_n = 0;
  for (int i = 0; i < n_strips; ++i) {
    offset[i] = host_n;
    host_n += strips[i].rec.host.vertex_count();
  }
  std::vector<std::pair<int, int>> host_edges;
  for (int i = 0; i < n_strips; ++i)
    for (auto [a, b] : strips[i].rec.host.edges())
      host_edges.push_back({offset[i] + a, offset[i] + b});
  // base vertex -> host vertex of the matching strip end image
  std::vector<int> end_host(total, -1);
  for (int i = 0; i < n_strips; ++i) {
    end_host[c.pairs[i].first] = offset[i] + strips[i].rec.phi[strips[i].end_a];
    end_host[c.pairs[i].second] = offset[i] + strips[i].rec.phi[strips[i].end_b];
  }
  for (const auto& cl : c.g0_cliques)
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j)
        host_edges.push_back({std::min(end_host[cl[i]], end_host[cl[j]]),
                              std::max(end_host[cl[i]], end_host[cl[j]])});
  Reconstruction rec;
  rec.host = Graph::from_edges(host_n, host_edges);

  rec.phi.assign(verts.size(), -1);
  for (std::size_t v = 0; v < order.size(); ++v) {
    Tag t = order[v];
    rec.phi[v] = offset[t.strip] + strips[t.strip].rec.phi[t.id];
  }

  // Kept trees avoid both end images of their strip.
  for (int i = 0; i < n_strips; ++i) {
    int ia = strips[i].rec.phi[strips[i].end_a];
    int ib = strips[i].rec.phi[strips[i].end_b];
    for (const SubTree& t : strips[i].rec.trees) {
      if (t.contains_vertex(ia) || t.contains_vertex(ib)) continue;
      SubTree shifted;
      for (int v : t.vertices) shifted.vertices.push_back(offset[i] + v);
      for (auto [a, b] : t.edges) shifted.edges.push_back({offset[i] + a, offset[i] + b});
      shifted.canonicalize();
      rec.trees.push_back(std::move(shifted));
    }
  }

  // One spanning tree per base component over everything its ends touch.
  for (std::size_t comp = 0; comp < c.g0_cliques.size(); ++comp) {
    std::set<int> span;
    for (int base_v : c.g0_cliques[comp]) {
      // Which strip end realizes this base vertex?
      for (int i = 0; i < n_strips; ++i) {
        int local_end = -1;
        if (c.pairs[i].first == base_v) local_end = strips[i].end_a;
        if (c.pairs[i].second == base_v) local_end = strips[i].end_b;
        if (local_end < 0) continue;
        int end_img = strips[i].rec.phi[local_end];
        for (const SubTree& t : strips[i].rec.trees)
          if (t.contains_vertex(end_img))
            for (int v : t.vertices) span.insert(offset[i] + v);
      }
    }
    if (span.empty()) continue;
    // BFS spanning tree inside the host restricted to `span`.
    SubTree tc;
    std::set<int> seen;
    int root = *span.begin();
    seen.insert(root);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : rec.host.neighbors(u)) {
        if (!span.count(v) || seen.count(v)) continue;
        seen.insert(v);
        tc.edges.push_back({std::min(u, v), std::max(u, v)});
        q.push(v);
      }
    }
    if (seen.size() != span.size())
      throw InvariantViolation("component span is not connected in the host");
    tc.vertices.assign(span.begin(), span.end());
    tc.canonicalize();
    rec.trees.push_back(std::move(tc));
  }
  std::sort(rec.trees.begin(), rec.trees.end());
  rec.trees.erase(std::unique(rec.trees.begin(), rec.trees.end()), rec.trees.end());

  ReconstructionReport rep = validate_reconstruction(g, rec);
  if (!rep.ok())
    throw InvariantViolation("strip composition produced an invalid reconstruction: " +
                             rep.detail);
  return {std::move(g), std::move(rec)};
}

Graph line_graph(const Graph& root) {
  std::vector<std::pair<int, int>> es = root.edges();
  Graph g(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) g.add_edge(static_cast<int>(i),
                                                           static_cast<int>(j));
    }
  return g;
}

ModelInstance line_graph_reconstruction(const Graph& root) {
  std::vector<std::pair<int, int>> es = root.edges();
  int rn = root.vertex_count();
  Graph g = line_graph(root);

  // Host: subdivision of the root. Vertex e of G sits on the subdivision
  // point of its root edge; each root vertex contributes a star tree.
  Graph host(rn + static_cast<int>(es.size()));
  for (std::size_t e = 0; e < es.size(); ++e) {
    host.add_edge(es[e].first, rn + static_cast<int>(e));
    host.add_edge(es[e].second, rn + static_cast<int>(e));
  }
  Reconstruction r;
  r.host = std::move(host);
  r.phi.resize(es.size());
  for (std::size_t e = 0; e < es.size(); ++e) r.phi[e] = rn + static_cast<int>(e);
  for (int x = 0; x < rn; ++x) {
    if (root.degree(x) == 0) continue;
    SubTree t;
    t.vertices.push_back(x);
    for (std::size_t e = 0; e < es.size(); ++e)
      if (es[e].first == x || es[e].second == x) {
        t.vertices.push_back(rn + static_cast<int>(e));
        t.edges.push_back({x, rn + static_cast<int>(e)});
      }
    t.canonicalize();
    r.trees.push_back(std::move(t));
  }
  std::sort(r.trees.begin(), r.trees.end());
  ReconstructionReport rep = validate_reconstruction(g, r);
  if (!rep.ok())
    throw InvariantViolation("line-graph reconstruction invalid: " + rep.detail);
  if (!fuzzy_pairs(g, r).empty())
    throw InvariantViolation("line-graph reconstruction has fuzzy pairs");
  return {std::move(g), std::move(r)};
}

}  // namespace cpnum
