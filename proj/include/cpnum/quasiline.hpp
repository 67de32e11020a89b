#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpnum/competition.hpp"
#include "cpnum/graph.hpp"

namespace cpnum {

// Subtree of a host graph: a connected acyclic edge-subgraph, stored as a
// sorted vertex list plus sorted (min,max) edge list.
struct SubTree {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;

  void canonicalize();
  bool contains_vertex(int h) const;
  bool contains_edge(int a, int b) const;
  bool operator==(const SubTree& o) const {
    return vertices == o.vertices && edges == o.edges;
  }
  bool operator<(const SubTree& o) const {
    return vertices != o.vertices ? vertices < o.vertices : edges < o.edges;
  }
};

// Host graph H, total vertex mapping phi : V(G) -> V(H), and a family of
// distinct subtrees of H. The four core properties:
//   1. adjacent vertices of G share a tree through their images;
//   2. a tree containing the images of a non-adjacent pair is a path whose
//      endpoints are exactly those two distinct images;
//   3. the witnessing tree is determined by the image of either member of a
//      non-adjacent pair;
//   4. host vertices of degree >= 3 lie in at most one tree.
struct Reconstruction {
  Graph host;
  std::vector<int> phi;
  std::vector<SubTree> trees;

  std::vector<int> preimages(int host_vertex) const;  // sorted
};

struct ReconstructionReport {
  bool structural = false;
  bool p1 = false, p2 = false, p3 = false, p4 = false;
  bool p3_prime = false;
  // Raised when the direct property-3 test and its pair-uniqueness
  // reformulation disagree while properties 1, 2 and 4 hold.
  bool p3_disagreement = false;
  std::string detail;
  bool ok() const { return structural && p1 && p2 && p3 && p4; }
};

ReconstructionReport validate_reconstruction(const Graph& g, const Reconstruction& r);

// Non-adjacent pair whose images are the endpoints of a path tree.
struct FuzzyPair {
  int a = -1, b = -1;  // a < b
  int tree = -1;       // index into r.trees
};

// All fuzzy pairs, sorted. Their image endpoint sets are pairwise equal or
// disjoint; violated inputs raise InvariantViolation.
std::vector<FuzzyPair> fuzzy_pairs(const Graph& g, const Reconstruction& r);

// The five extra properties of a pleasant reconstruction:
//   5. each member of a fuzzy pair has a neighbor mapped onto the partner's
//      image;
//   6. every image has host degree at most 2;
//   7. trees have >= 2 vertices and every tree leaf is an image;
//   8. tree edges exhaust the host edges;
//   9. no tree's vertex set contains another's.
struct PleasantReport {
  bool p5 = false, p6 = false, p7 = false, p8 = false, p9 = false;
  std::string detail;
  bool ok() const { return p5 && p6 && p7 && p8 && p9; }
};

PleasantReport validate_pleasant(const Graph& g, const Reconstruction& r);

// Rebuild a valid reconstruction into a pleasant one of the same graph:
// (a) resolve fuzzy pairs lacking the p5 witness by subdividing the path
//     near the offender and splitting it (strictly decreases the fuzzy-pair
//     count); (b) push images off high-degree host vertices onto fresh
//     pendants; (c) give every tree two distinct useful images and trim
//     image-free leaves; (d) drop included trees and uncovered host edges.
Reconstruction pleasantify(const Graph& g, Reconstruction r);

// Steps (c) and (d) of pleasantify. Used on their own to tidy a
// reconstruction after vertices have been peeled from its graph.
Reconstruction normalize_trees(const Graph& g, Reconstruction r);

namespace detail {
// Subdivide tree `t`'s edge next to endpoint p (t must be a path with
// endpoints p and q), move the `remap` vertices onto the new host vertex,
// and replace t by t-minus-p and t-minus-q. Trees through the subdivided
// edge are subdivided too; other trees through p receive the new vertex as
// a pendant. Shared by the fuzzy-pair reduction and the strip end
// alteration.
void split_fuzzy_tree(Reconstruction& r, int tree, int p, int q,
                      const std::vector<int>& remap);
}  // namespace detail

// The unique tree containing every path that starts at host vertex h along
// the incident host edge (h,e_to). Pleasant input required. The result
// satisfies the leaf symmetry: recomputing from any leaf of the returned
// tree along its incident tree edge yields the same tree (asserted).
int tree_at(const Reconstruction& r, int h, int e_to);

// Interval models. Points are 0..points-1, in cyclic order for circular
// models and linear order for strips. Intervals are closed point ranges
// [start,end] walked forward (cyclically for circular models). A pair of
// vertices lying at the two endpoint images of every common interval may be
// declared non-adjacent by listing it in fuzzy_nonedges; everything else
// sharing an interval is adjacent.
struct CircularIntervalModel {
  int points = 0;
  std::vector<int> phi;  // vertex -> point
  std::vector<std::pair<int, int>> intervals;
  std::vector<std::pair<int, int>> fuzzy_nonedges;
};

struct StripModel {
  int points = 0;
  std::vector<int> phi;
  std::vector<std::pair<int, int>> intervals;  // start <= end
  int end_a = -1, end_b = -1;                  // designated simplicial ends
  std::vector<std::pair<int, int>> fuzzy_nonedges;
};

// Disjoint union of complete graphs with a perfect pairing of its vertices;
// strip i is glued across pair (a_i, b_i).
struct StripComposition {
  std::vector<std::vector<int>> g0_cliques;
  std::vector<std::pair<int, int>> pairs;
  std::vector<StripModel> strips;
};

struct ModelInstance {
  Graph graph;
  Reconstruction rec;
};

struct StripInstance {
  Graph graph;
  Reconstruction rec;
  int end_a = -1, end_b = -1;
};

// Host is the cycle (or path, for few points) on the image points; each
// interval induces a path tree.
ModelInstance reconstruction_from_circular_model(const CircularIntervalModel& m);

// Host is a path; ends keep private images and are altered out of any fuzzy
// pair by subdividing near the partner image.
StripInstance reconstruction_from_strip(const StripModel& m);

// Gluing of strips over the base multipartite-of-cliques graph: interiors
// of paired ends are joined, kept trees avoid end images, and each base
// component contributes one spanning tree over everything its ends touch.
ModelInstance compose_strips(const StripComposition& c);

// G = line graph of root; host is the subdivision of root, with one star
// tree per root vertex. The result never has fuzzy pairs.
Graph line_graph(const Graph& root);
ModelInstance line_graph_reconstruction(const Graph& root);

struct QuasilineCheck {
  bool ok = false;
  int failing_vertex = -1;
  // Per-vertex partition of N(v) into at most two cliques, when one exists.
  std::vector<std::optional<std::pair<Clique, Clique>>> partitions;
};

QuasilineCheck is_quasiline(const Graph& g);

// Incremental cover extracted from one fuzzy pair of a pleasant
// reconstruction. Covers the union of the two endpoint preimage classes.
CliqueSequence fuzzy_incremental_cover(const Graph& g, const Reconstruction& r,
                                       const FuzzyPair& f);

// For every vertex, two cliques covering its star, each shared with another
// vertex. Requires a pleasant fuzzy-free reconstruction of a graph without
// simplicial vertices; every image then has host degree exactly 2 and the
// cliques are the preimages of the two trees leaving the image.
struct CliquePairAssignment {
  std::vector<std::array<Clique, 2>> cliques;  // indexed by vertex
};

CliquePairAssignment clique_pair_assignment(const Graph& g, const Reconstruction& r);

// Cycle in the vertex/clique incidence graph of an assignment, returned as
// an incremental cover of the cycle's vertices. The incidence graph has
// minimum degree 2, so a cycle always exists.
CliqueSequence bipartite_cycle_cover(const Graph& g, const CliquePairAssignment& a);

struct OpsutReport {
  CpWitness witness;
  CliqueSequence cover;  // the concatenated incremental cover of V(G)
  std::vector<std::string> stages;
};

// Full pipeline: repeatedly cover-and-peel (simplicial vertex, fuzzy pair,
// or assignment cycle), concatenate the partial covers into an incremental
// cover of V(G), and convert it into a two-added-vertex witness.
OpsutReport opsut_witness(const Graph& g, const Reconstruction& r);

}  // namespace cpnum
