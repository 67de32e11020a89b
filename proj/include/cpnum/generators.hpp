#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "cpnum/graph.hpp"
#include "cpnum/quasiline.hpp"

namespace cpnum {

// Deterministic RNG wrapper; all corpus generators draw from it so a fixed
// seed reproduces instances byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

 private:
  std::mt19937_64 eng_;
};

Graph random_graph(int n, double edge_probability, Rng& rng);
Graph random_connected_graph(int n, double edge_probability, Rng& rng);

// Chordal by construction: each new vertex is attached to a clique grown
// inside an existing closed neighborhood, so it is simplicial when added.
Graph random_chordal_graph(int n, Rng& rng);

struct CircularInstance {
  CircularIntervalModel model;
  ModelInstance built;
};
struct StripGenInstance {
  StripModel model;
  StripInstance built;
};
struct CompositionInstance {
  StripComposition model;
  ModelInstance built;
};

// Rejection-sampled generators: models are drawn until they build and
// validate, so every returned instance carries a verified reconstruction.
CircularInstance random_circular_instance(int max_points, int n, Rng& rng);
StripGenInstance random_strip_instance(int max_interior, Rng& rng);
CompositionInstance random_composition_instance(int max_strips, Rng& rng);
ModelInstance random_line_graph_instance(int max_root_vertices, Rng& rng);

}  // namespace cpnum
