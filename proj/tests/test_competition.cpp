#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cpnum/competition.hpp"
#include "cpnum/errors.hpp"
#include "cpnum/generators.hpp"
#include "cpnum/holes.hpp"

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

// Cover of K_n by prefixes of the ordering; a handy valid cover family.
LMCover prefix_cover(int n) {
  LMCover l;
  for (int i = 0; i < n; ++i) l.ordering.push_back(i);
  for (int j = 0; j < n; ++j) {
    Clique c;
    for (int i = 0; i <= std::min(j + 1, n - 1); ++i) c.push_back(i);
    l.cliques.push_back(c);
  }
  return l;
}

}  // namespace

TEST_CASE("competition graphs of digraphs") {
  Graph g1 = competition_graph(Digraph::from_arcs(3, {{0, 2}, {1, 2}}));
  CHECK(g1.edge_count() == 1);
  CHECK(g1.has_edge(0, 1));

  CHECK(competition_graph(Digraph(4)).edge_count() == 0);

  Graph g3 = competition_graph(Digraph::from_arcs(4, {{0, 3}, {1, 3}, {2, 3}}));
  CHECK(g3.has_edge(0, 1));
  CHECK(g3.has_edge(0, 2));
  CHECK(g3.has_edge(1, 2));
  CHECK(g3.neighbors(3).empty());
}

TEST_CASE("witness verification pinpoints failures") {
  Graph k2 = complete(2);
  CpWitness good{k2, Digraph::from_arcs(3, {{0, 2}, {1, 2}}), 1, {}};
  CHECK(verify_cp_witness(k2, good).ok);

  CpWitness cyclic{k2, Digraph::from_arcs(3, {{0, 2}, {1, 2}, {2, 0}, {0, 1}}), 1, {}};
  VerifyResult r = verify_cp_witness(k2, cyclic);
  CHECK_FALSE(r.ok);
  CHECK(r.report == "not acyclic");

  CpWitness wrong_count{k2, Digraph::from_arcs(4, {{0, 2}, {1, 2}}), 1, {}};
  CHECK(verify_cp_witness(k2, wrong_count).report.find("vertex count") !=
        std::string::npos);

  CpWitness missing{k2, Digraph(3), 1, {}};
  CHECK(verify_cp_witness(k2, missing).report.find("missing edge") != std::string::npos);

  CpWitness extra{complete(2), Digraph::from_arcs(3, {{0, 2}, {1, 2}}), 1, {}};
  Graph edgeless(2);
  CHECK(verify_cp_witness(edgeless, extra).report.find("base graph") != std::string::npos);
}

TEST_CASE("witness from the peel pipeline replays through the verifier") {
  Graph c4 = cycle(4);
  KimReport rep = kim_witness(c4);
  CHECK(verify_cp_witness(c4, rep.witness).ok);
}

TEST_CASE("oracle on known values") {
  CHECK(brute_force_cp(Graph(4), 2) == 0);
  CHECK(brute_force_cp(Graph(0), 0) == 0);
  CHECK(brute_force_cp(complete(3), 3) == 1);
  CHECK(brute_force_cp(cycle(4), 3) == 2);
  CHECK_FALSE(brute_force_cp(cycle(4), 1).has_value());
}

TEST_CASE("oracle respects isolated vertices") {
  // K_2 plus an isolated vertex is already a competition graph: the lone
  // vertex serves as prey.
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(brute_force_cp(g, 2) == 0);
}

TEST_CASE("oracle needs an added vertex when no vertex is isolated") {
  Rng rng(19);
  int tested = 0;
  while (tested < 20) {
    Graph g = random_graph(rng.uniform(2, 6), 0.5, rng);
    if (g.edge_count() == 0) continue;
    bool isolated = false;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 0) isolated = true;
    if (isolated) continue;
    ++tested;
    auto cp = brute_force_cp(g, 6);
    REQUIRE(cp.has_value());
    CHECK(*cp >= 1);
  }
}

TEST_CASE("ordered cover verification") {
  Graph k2 = complete(2);
  LMCover l;
  l.ordering = {0, 1};
  l.cliques = {{}, {0, 1}};
  CHECK(verify_lm_cover(k2, l).ok);

  LMCover uncovered;
  uncovered.ordering = {0, 1};
  uncovered.cliques = {{}, {}};
  CHECK(verify_lm_cover(k2, uncovered).report.find("uncovered") != std::string::npos);

  // v_3 inside C_1 breaks the ordering constraint: 3 >= 1+2.
  Graph p3 = parse_graph("3 2\n0 1\n1 2\n", GraphFormat::EdgeList);
  LMCover bad;
  bad.ordering = {0, 1, 2};
  bad.cliques = {{1, 2}, {0, 1}, {}};
  VerifyResult r = verify_lm_cover(p3, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.report.find("ordering constraint") != std::string::npos);

  LMCover nonclique;
  nonclique.ordering = {0, 1, 2};
  nonclique.cliques = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(verify_lm_cover(p3, nonclique).report.find("not a clique") != std::string::npos);
}

TEST_CASE("dag construction from an ordered cover") {
  Graph k2 = complete(2);
  LMCover l;
  l.ordering = {0, 1};
  l.cliques = {{0, 1}, {}};  // v_2 in C_1 is fine: 2 < 1+2
  CpWitness w = dag_from_lm_cover(k2, l);
  CHECK(w.added == 2);
  CHECK(verify_cp_witness(k2, w).ok);

  Graph edgeless(3);
  LMCover empty;
  empty.ordering = {0, 1, 2};
  empty.cliques = {{}, {}, {}};
  CpWitness we = dag_from_lm_cover(edgeless, empty);
  CHECK(we.dag.arc_count() == 0);
  CHECK(verify_cp_witness(edgeless, we).ok);

  LMCover bad;
  bad.ordering = {0, 1};
  bad.cliques = {{}, {}};
  CHECK_THROWS_AS(dag_from_lm_cover(k2, bad), DomainError);
}

TEST_CASE("incremental cover verification") {
  // A simplicial vertex with its closed neighborhood covers itself.
  Graph paw = parse_graph("4 4\n0 1\n0 2\n1 2\n2 3\n", GraphFormat::EdgeList);
  CliqueSequence s;
  s.cliques = {{0, 1, 2}};
  s.target = {0};
  CHECK(verify_incremental_cover(paw, s).ok);

  CliqueSequence missing;
  missing.cliques = {{0, 1, 2}};
  missing.target = {2};  // star of 2 includes the uncovered edge 2-3
  VerifyResult r = verify_incremental_cover(paw, missing);
  CHECK_FALSE(r.ok);
  CHECK(r.report.find("uncovered") != std::string::npos);

  CliqueSequence too_long;
  too_long.cliques = {{0, 1, 2}, {0, 1, 2}, {2, 3}};
  too_long.target = {0, 1};
  CHECK_FALSE(verify_incremental_cover(paw, too_long).ok);
}

TEST_CASE("incremental to ordered cover on tiny graphs") {
  Graph k2 = complete(2);
  CliqueSequence s;
  s.cliques = {{0, 1}, {0, 1}};
  s.target = {0, 1};
  REQUIRE(verify_incremental_cover(k2, s).ok);
  LMCover l = incremental_to_lm(k2, s);
  CHECK(verify_lm_cover(k2, l).ok);

  Graph edgeless(2);
  CliqueSequence se;
  se.cliques = {{}, {}};
  se.target = {0, 1};
  LMCover le = incremental_to_lm(edgeless, se);
  CHECK(verify_lm_cover(edgeless, le).ok);

  CliqueSequence partial;
  partial.cliques = {{0, 1}};
  partial.target = {0};
  CHECK_THROWS_AS(incremental_to_lm(k2, partial), DomainError);
}

TEST_CASE("cover conversions round-trip on complete graphs") {
  for (int n = 1; n <= 6; ++n) {
    Graph g = complete(n);
    LMCover l = prefix_cover(n);
    REQUIRE(verify_lm_cover(g, l).ok);
    CliqueSequence s = lm_to_incremental(g, l);
    CHECK(verify_incremental_cover(g, s).ok);
    LMCover l2 = incremental_to_lm(g, s);
    CHECK(verify_lm_cover(g, l2).ok);
    CliqueSequence s2 = lm_to_incremental(g, l2);
    CHECK(verify_incremental_cover(g, s2).ok);
    CpWitness w = dag_from_lm_cover(g, l2);
    CHECK(verify_cp_witness(g, w).ok);
    if (n >= 2) {
      auto cp = brute_force_cp(g, 2);
      REQUIRE(cp.has_value());
      CHECK(*cp == 1);
    }
  }
}

TEST_CASE("built dags add exactly two isolated vertices") {
  Graph c4 = cycle(4);
  CliqueSequence s;
  s.cliques = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  s.target = {0, 1, 2, 3};
  REQUIRE(verify_incremental_cover(c4, s).ok);
  LMCover l = incremental_to_lm(c4, s);
  CpWitness w = dag_from_lm_cover(c4, l);
  CHECK(w.added == 2);
  Graph comp = competition_graph(w.dag);
  CHECK(comp.neighbors(4).empty());
  CHECK(comp.neighbors(5).empty());
  for (auto [u, v] : c4.edges()) CHECK(comp.has_edge(u, v));
  CHECK(comp.edge_count() == c4.edge_count());
}
