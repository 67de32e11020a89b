#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cpnum/competition.hpp"
#include "cpnum/errors.hpp"

namespace cpnum {

namespace {

using Mask = std::uint32_t;      // placed-vertex set
using EdgeMask = std::uint64_t;  // covered-edge set

struct StateKey {
  Mask placed;
  EdgeMask covered;
  bool operator==(const StateKey& o) const {
    return placed == o.placed && covered == o.covered;
  }
};

struct StateHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.covered * 0x9e3779b97f4a7c15ull;
    h ^= (std::uint64_t{k.placed} << 32) | k.placed;
    h *= 0xc2b2ae3d27d4eb4full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Bron-Kerbosch over an adjacency-mask graph; reports maximal cliques.
void maximal_cliques(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                     std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = __builtin_ctz(px);
  int best = -1;
  for (Mask t = px; t; t &= t - 1) {
    int v = __builtin_ctz(t);
    int cnt = __builtin_popcount(p & adj[v]);
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  for (Mask t = p & ~adj[pivot]; t; t &= t - 1) {
    int v = __builtin_ctz(t);
    Mask bit = Mask{1} << v;
    maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

struct OracleSearch {
  int n = 0;
  int k_max = 0;
  int infeasible = 0;  // k_max + 1, the "more than budget" sentinel
  EdgeMask all_edges = 0;
  std::vector<Mask> adj;                       // vertex -> neighbor mask
  std::vector<std::vector<int>> edge_bit;      // edge -> bit index
  std::vector<Mask> global_cliques;            // maximal cliques of g
  std::vector<EdgeMask> global_pairs;          // their pair masks
  std::unordered_map<Mask, std::vector<EdgeMask>> clique_cache;
  std::unordered_map<StateKey, int, StateHash> memo;
  std::unordered_map<EdgeMask, int> cover_memo;

  EdgeMask pair_mask(Mask clique) const {
    EdgeMask pm = 0;
    for (Mask t = clique; t; t &= t - 1) {
      int u = __builtin_ctz(t);
      for (Mask s = t & (t - 1); s; s &= s - 1) {
        int v = __builtin_ctz(s);
        pm |= EdgeMask{1} << edge_bit[u][v];
      }
    }
    return pm;
  }

  // Pair masks of the maximal cliques of g[placed]. An assigned clique may
  // be assumed maximal within the already-placed vertices: enlarging it only
  // covers more edges and every covered pair is an edge.
  const std::vector<EdgeMask>& cliques_of(Mask placed) {
    auto it = clique_cache.find(placed);
    if (it != clique_cache.end()) return it->second;
    std::vector<EdgeMask> pms;
    if (placed == 0) {
      pms.push_back(0);
    } else {
      std::vector<Mask> radj = adj;
      for (auto& a : radj) a &= placed;
      std::vector<Mask> cl;
      maximal_cliques(radj, 0, placed, 0, cl);
      pms.reserve(cl.size());
      for (Mask c : cl) pms.push_back(pair_mask(c));
      std::sort(pms.begin(), pms.end());
      pms.erase(std::unique(pms.begin(), pms.end()), pms.end());
    }
    return clique_cache.emplace(placed, std::move(pms)).first->second;
  }

  // Least number of unrestricted cliques covering `residual`, capped.
  int cover_count(EdgeMask residual) {
    if (residual == 0) return 0;
    auto it = cover_memo.find(residual);
    if (it != cover_memo.end()) return it->second;
    int lowest = __builtin_ctzll(residual);
    int best = infeasible;
    for (std::size_t i = 0; i < global_cliques.size(); ++i) {
      if (!(global_pairs[i] >> lowest & 1)) continue;
      int sub = cover_count(residual & ~global_pairs[i]);
      if (sub + 1 < best) best = sub + 1;
      if (best == 1) break;
    }
    cover_memo.emplace(residual, best);
    return best;
  }

  int search(Mask placed, EdgeMask covered) {
    if (placed == (Mask{1} << n) - 1) return cover_count(all_edges & ~covered);
    StateKey key{placed, covered};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = infeasible;
    const std::vector<EdgeMask>& pms = cliques_of(placed);
    for (int u = 0; u < n && best > 0; ++u) {
      if (placed >> u & 1) continue;
      Mask next = placed | (Mask{1} << u);
      for (EdgeMask pm : pms) {
        int sub = search(next, covered | pm);
        if (sub < best) best = sub;
        if (best == 0) break;
      }
    }
    memo.emplace(key, best);
    return best;
  }
};

}  // namespace

std::optional<int> brute_force_cp(const Graph& g, int k_max) {
  if (k_max < 0) throw DomainError("brute_force_cp: negative k_max");
  int n = g.vertex_count();
  if (n > 20) throw DomainError("brute_force_cp: graph too large for the oracle");
  if (g.edge_count() > 64)
    throw DomainError("brute_force_cp: too many edges for the oracle");
  if (g.edge_count() == 0) return 0;

  OracleSearch s;
  s.n = n;
  s.k_max = k_max;
  s.infeasible = k_max + 1;
  s.adj.assign(n, 0);
  s.edge_bit.assign(n, std::vector<int>(n, -1));
  int bit = 0;
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= Mask{1} << v;
    s.adj[v] |= Mask{1} << u;
    s.edge_bit[u][v] = s.edge_bit[v][u] = bit;
    s.all_edges |= EdgeMask{1} << bit;
    ++bit;
  }
  std::vector<Mask> cl;
  maximal_cliques(s.adj, 0, (Mask{1} << n) - 1, 0, cl);
  for (Mask c : cl) {
    if (__builtin_popcount(c) < 2) continue;
    s.global_cliques.push_back(c);
    s.global_pairs.push_back(s.pair_mask(c));
  }
  int answer = s.search(0, 0);
  if (answer > k_max) return std::nullopt;
  return answer;
}

}  // namespace cpnum
