#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpnum/digraph.hpp"
#include "cpnum/graph.hpp"

namespace cpnum {

struct VerifyResult {
  bool ok = false;
  std::string report;
  explicit operator bool() const { return ok; }
};

// Undirected graph on V(d): u and v adjacent iff they have a common
// out-neighbor in d. Acyclicity of d is not required here.
Graph competition_graph(const Digraph& d);

// Certificate that some graph has competition number at most `added`:
// an acyclic digraph whose competition graph is the base graph plus
// `added` appended isolated vertices. Dag vertices 0..n-1 are the base
// vertices, n..n+added-1 the appended ones. The trail is a replayable
// list of text records describing how the witness was derived.
struct CpWitness {
  Graph base;
  Digraph dag;
  int added = 0;
  std::vector<std::string> trail;
};

// Checks, in order: base matches g, vertex counts, acyclicity, and that
// competition_graph(dag) equals g plus `added` isolated vertices. The
// report pinpoints the first violated clause.
VerifyResult verify_cp_witness(const Graph& g, const CpWitness& w);

// Independent brute-force oracle for the competition number: least k <= k_max
// such that g plus k isolated vertices is the competition graph of some
// acyclic digraph, or nullopt if none. Searches vertex orderings with
// per-position clique assignments; a graph-with-extras admits a witness iff
// there is an ordering u_1..u_{n+k} and cliques A_i contained in
// {u_1..u_{i-1}} (the in-neighborhood of u_i) whose pairwise edges union to
// exactly E(g). Added vertices may be assumed to have no out-arcs, so they
// are canonically placed last with unrestricted clique choices. Memoizes on
// (placed-vertex set, covered-edge set). Exponential; intended for
// |V(g)| + k_max <= 12.
std::optional<int> brute_force_cp(const Graph& g, int k_max);

// Ordered clique family claiming to incrementally cover the vertex set
// `target`: the cliques cover every edge incident with target, and each
// prefix C_1..C_{i+1} covers the full vertex stars of at least i distinct
// target members.
struct CliqueSequence {
  std::vector<Clique> cliques;
  std::vector<int> target;  // sorted vertex set V'
};

VerifyResult verify_incremental_cover(const Graph& g, const CliqueSequence& s);

// Clique edge cover C_1..C_n with a vertex ordering v_1..v_n such that
// v_i is not in C_j whenever i >= j+2. Empty cliques are allowed.
struct LMCover {
  std::vector<int> ordering;    // permutation of V(g)
  std::vector<Clique> cliques;  // exactly n cliques
};

VerifyResult verify_lm_cover(const Graph& g, const LMCover& l);

// Constructive direction of the cover characterization: members of C_j feed
// the prey v_{j+2}, with two appended prey a and b for the last two cliques.
// The result always verifies with added = 2.
CpWitness dag_from_lm_cover(const Graph& g, const LMCover& l);

// Conversion between the two cover styles. incremental_to_lm requires the
// sequence to cover all of V(g); sequences shorter than n are padded with
// empty cliques. The greedy ordering picks, at step i, the lowest-numbered
// unchosen vertex whose star is covered by C_1..C_{i+1}.
LMCover incremental_to_lm(const Graph& g, const CliqueSequence& s);
CliqueSequence lm_to_incremental(const Graph& g, const LMCover& l);

}  // namespace cpnum
