#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpnum/competition.hpp"
#include "cpnum/graph.hpp"

namespace cpnum {

inline constexpr std::size_t kDefaultHoleLimit = 100000;

// Induced cycle of length at least 4, stored in canonical rotation and
// reflection: minimum vertex first, then its smaller cycle-neighbor.
struct Hole {
  std::vector<int> cycle;
  bool contains(int v) const;
  std::vector<std::pair<int, int>> edge_list() const;
  bool operator==(const Hole& o) const { return cycle == o.cycle; }
  bool operator<(const Hole& o) const { return cycle < o.cycle; }
};

Hole canonical_hole(const std::vector<int>& cycle);
bool is_hole_of(const Graph& g, const Hole& h);

// All holes of g, deduplicated and sorted. Throws LimitError when the count
// exceeds `limit`.
std::vector<Hole> enumerate_holes(const Graph& g, std::size_t limit = kDefaultHoleLimit);

// Number of holes containing v. Satisfies hole(G) = hole(G-v) + hole(v).
int holes_at(const Graph& g, int v, std::size_t limit = kDefaultHoleLimit);

// GF(2) rank of the edge-incidence vectors of all holes.
int hole_space_dim(const Graph& g, std::size_t limit = kDefaultHoleLimit);

// defect(v) = |N(v)| - omega(G[N(v)]), with a maximum-clique witness.
// A vertex is simplicial iff its defect is 0.
struct DefectReport {
  int vertex = -1;
  int omega = 0;
  int defect = 0;
  Clique witness_clique;      // maximum clique of N(v), in g's ids
  std::vector<int> leftover;  // N(v) minus the clique, sorted: z_1..z_defect
};

DefectReport simplicial_defect(const Graph& g, int v);

// v is good when every non-adjacent pair u,u' in N(v) lies on a common hole
// with v. Such a hole contains no other member of N(v), so one is found by
// connecting u and u' in g minus ({v} plus N(v)\{u,u'}) and closing the
// shortest path through v.
struct GoodVertexCertificate {
  int vertex = -1;
  struct PairHole {
    int u = -1;
    int u2 = -1;
    Hole hole;
  };
  std::vector<PairHole> pairs;  // one entry per non-adjacent neighbor pair
};

std::optional<GoodVertexCertificate> is_good_vertex(const Graph& g, int v);

// Some good vertex; ties broken by minimum defect, then minimum id.
// Raises InvariantViolation if no vertex qualifies (every graph has one).
std::pair<int, GoodVertexCertificate> find_good_vertex(const Graph& g);

// Two non-adjacent good vertices of a non-complete graph, found by the
// separator recursion: complete a minimum vertex separator into a clique on
// each side and recurse. Throws DomainError on complete graphs.
std::pair<int, int> find_two_good_vertices(const Graph& g);

// Witness extension by one vertex: redirect the arcs that ended in a
// designated added prey u to end in v, feed u from v and a maximum clique of
// N(v), and give each leftover neighbor z_i a fresh shared prey with v. The
// added count grows by exactly defect(v). The input witness is first
// normalized so u has no out-arcs (dropping out-arcs of an added vertex
// never changes the competition graph; the removal is re-verified).
CpWitness extend_dag_with_vertex(const CpWitness& w_minus_v, const Graph& g, int v,
                                 const DefectReport& r);

struct PeelStep {
  int vertex = -1;  // id within the graph it was peeled from
  int defect = 0;
  int holes_at_vertex = 0;
};

struct KimReport {
  CpWitness witness;
  std::size_t hole_count = 0;
  int hole_dim = 0;
  std::vector<PeelStep> peels;
};

// Recursively peel good vertices, extend witnesses back up, then drop added
// vertices that never receive an arc. Hard postconditions:
// added <= hole_count + 1 and added <= hole_dim + 1.
KimReport kim_witness(const Graph& g, std::size_t hole_limit = kDefaultHoleLimit);

}  // namespace cpnum
