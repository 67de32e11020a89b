#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cpnum/digraph.hpp"
#include "cpnum/errors.hpp"
#include "cpnum/generators.hpp"
#include "cpnum/gf2.hpp"
#include "cpnum/graph.hpp"

using namespace cpnum;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("edge-list parsing") {
  Graph path = parse_graph("3 2\n0 1\n1 2\n", GraphFormat::EdgeList);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  Graph lone = parse_graph("1 0\n", GraphFormat::EdgeList);
  CHECK(lone.vertex_count() == 1);
  CHECK(lone.edge_count() == 0);

  Graph c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n", GraphFormat::EdgeList);
  CHECK(c4 == cycle(4));

  Graph commented = parse_graph("# a comment\n3 1 # header\n0 2\n", GraphFormat::EdgeList);
  CHECK(commented.has_edge(0, 2));
}

TEST_CASE("edge-list parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0\n", GraphFormat::EdgeList),
                       "line 2: self-loop", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 2\n0 1\n0 1\n", GraphFormat::EdgeList),
                       "line 3: duplicate edge", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 5\n", GraphFormat::EdgeList),
                       "line 2: endpoint out of range", ParseError);
  CHECK_THROWS_AS(parse_graph("2 1\nzero 1\n", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("json graph format") {
  Graph g = parse_graph(R"({"n":3,"edges":[[0,1],[1,2]],"labels":{"0":"prey"}})",
                        GraphFormat::Json);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.labels().at(0) == "prey");
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})", GraphFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,0]]})", GraphFormat::Json), ParseError);
}

TEST_CASE("parse of serialize is the identity") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng.uniform(0, 9), 0.4, rng);
    for (GraphFormat f : {GraphFormat::EdgeList, GraphFormat::Json}) {
      Graph back = parse_graph(serialize_graph(g, f), f);
      CHECK(back == g);
      CHECK(serialize_graph(back, f) == serialize_graph(g, f));
    }
  }
}

TEST_CASE("induced subgraphs") {
  Graph c4 = cycle(4);
  InducedSubgraph whole = induced_subgraph(c4, {0, 1, 2, 3});
  CHECK(whole.graph == c4);
  CHECK(whole.to_parent == std::vector<int>{0, 1, 2, 3});

  InducedSubgraph path = induced_subgraph(c4, {0, 1, 2});
  CHECK(path.graph.edge_count() == 2);
  CHECK(path.graph.has_edge(0, 1));
  CHECK(path.graph.has_edge(1, 2));
  CHECK_FALSE(path.graph.has_edge(0, 2));

  InducedSubgraph tri = induced_subgraph(complete(4), {1, 2, 3});
  CHECK(tri.graph == complete(3));

  CHECK_THROWS_AS(induced_subgraph(c4, {0, 7}), DomainError);
}

TEST_CASE("induced subgraph on all vertices is isomorphic via the relabeling") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng.uniform(1, 8), 0.5, rng);
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    InducedSubgraph s = induced_subgraph(g, all);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        CHECK(g.has_edge(u, v) == s.graph.has_edge(s.from_parent[u], s.from_parent[v]));
  }
}

TEST_CASE("clique tests") {
  Graph k4 = complete(4);
  CHECK(is_clique(k4, {1, 3}));
  CHECK_FALSE(is_clique(cycle(4), {0, 2}));
  CHECK(is_clique(cycle(4), {0}));
  CHECK(is_clique(cycle(4), {}));
}

TEST_CASE("maximum cliques") {
  CHECK(max_clique_size(complete(5)) == 5);
  CHECK(max_clique_size(cycle(4)) == 2);
  Graph c5 = cycle(5);
  InducedSubgraph nbhd = induced_subgraph(c5, c5.neighbors(0));
  CHECK(max_clique_size(nbhd.graph) == 1);
  CHECK(max_clique_size(Graph(0)) == 0);
}

TEST_CASE("co-bipartite neighborhoods") {
  Graph k4 = complete(4);
  auto whole = is_cobipartite(k4, {0, 1, 2, 3});
  REQUIRE(whole.has_value());
  CHECK(whole->second.empty());
  CHECK(is_clique(k4, whole->first));

  Graph c4 = cycle(4);
  auto split = is_cobipartite(c4, {0, 1, 2, 3});
  REQUIRE(split.has_value());
  CHECK(split->first.size() == 2);
  CHECK(split->second.size() == 2);
  CHECK(is_clique(c4, split->first));
  CHECK(is_clique(c4, split->second));

  Graph claw(4);  // center 0
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK_FALSE(is_cobipartite(claw, {1, 2, 3}).has_value());
}

TEST_CASE("co-bipartite agrees with exhaustive 2-coloring of the complement") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng.uniform(1, 8), 0.5, rng);
    std::vector<int> s;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng.chance(0.6)) s.push_back(v);
    auto part = is_cobipartite(g, s);
    InducedSubgraph sub = induced_subgraph(g, s);
    int k = sub.graph.vertex_count();
    bool colorable = false;
    for (int mask = 0; mask < (1 << k) && !colorable; ++mask) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = i + 1; j < k && ok; ++j)
          if (!sub.graph.has_edge(i, j) && ((mask >> i & 1) == (mask >> j & 1)))
            ok = false;
      colorable = ok;
    }
    CHECK(part.has_value() == colorable);
    if (part) {
      CHECK(is_clique(g, part->first));
      CHECK(is_clique(g, part->second));
    }
  }
}

TEST_CASE("acyclicity and topological orders") {
  Digraph d1 = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
  auto order = is_acyclic(d1);
  REQUIRE(order.has_value());
  CHECK(*order == std::vector<int>{0, 1, 2});

  Digraph d2 = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(is_acyclic(d2).has_value());

  CHECK(is_acyclic(Digraph(4)).has_value());
}

TEST_CASE("topological orders respect every arc") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform(1, 9);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(0.3)) d.add_arc(u, v);
    auto order = is_acyclic(d);
    REQUIRE(order.has_value());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
    for (auto [u, v] : d.arcs()) CHECK(pos[u] < pos[v]);
  }
}

TEST_CASE("gf2 elimination") {
  Gf2Vector v(5);
  v.set(2, true);
  auto [b1, grew1] = gf2_rank_insert(Gf2Basis(5), v);
  CHECK(grew1);
  CHECK(b1.rank() == 1);

  auto [b2, grew2] = gf2_rank_insert(b1, v);
  CHECK_FALSE(grew2);
  CHECK(b2.rank() == 1);

  Gf2Vector x(4), y(4);
  x.set(0, true);
  y.set(1, true);
  Gf2Vector both = x;
  both ^= y;
  Gf2Basis b(4);
  CHECK(b.insert(x));
  CHECK(b.insert(y));
  CHECK_FALSE(b.insert(both));
  CHECK(b.rank() == 2);

  CHECK_THROWS_AS(b.insert(Gf2Vector(3)), DomainError);
}

TEST_CASE("gf2 rank of standard basis vectors") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    int len = rng.uniform(1, 40);
    Gf2Basis basis(len);
    std::vector<int> picks;
    for (int i = 0; i < len; ++i)
      if (rng.chance(0.5)) picks.push_back(i);
    for (int i : picks) {
      Gf2Vector e(len);
      e.set(i, true);
      CHECK(basis.insert(e));
    }
    CHECK(basis.rank() == static_cast<int>(picks.size()));
    CHECK(basis.rank() <= len);
    int last = -1;
    for (const Gf2Vector& row : basis.rows()) {
      CHECK(row.leading_bit() > last);
      last = row.leading_bit();
    }
  }
}

TEST_CASE("empty graph is legal everywhere") {
  Graph g(0);
  CHECK(g.edge_count() == 0);
  CHECK(induced_subgraph(g, {}).graph.vertex_count() == 0);
  CHECK(is_clique(g, {}));
  CHECK(is_cobipartite(g, {}).has_value());
  CHECK(parse_graph("0 0\n", GraphFormat::EdgeList) == g);
}
