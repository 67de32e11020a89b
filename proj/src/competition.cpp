#include "cpnum/competition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cpnum/errors.hpp"

namespace cpnum {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

VerifyResult fail(const std::string& what) { return {false, what}; }
VerifyResult pass() { return {true, "ok"}; }

}  // namespace

Graph competition_graph(const Digraph& d) {
  int n = d.vertex_count();
  Graph g(n);
  for (int prey = 0; prey < n; ++prey) {
    std::vector<int> predators;
    for (int u = 0; u < n; ++u)
      if (d.has_arc(u, prey)) predators.push_back(u);
    for (std::size_t i = 0; i < predators.size(); ++i)
      for (std::size_t j = i + 1; j < predators.size(); ++j)
        if (!g.has_edge(predators[i], predators[j]))
          g.add_edge(predators[i], predators[j]);
  }
  return g;
}

VerifyResult verify_cp_witness(const Graph& g, const CpWitness& w) {
  if (!w.base.structurally_equal(g)) return fail("base graph mismatch");
  if (w.added < 0) return fail("negative added count");
  int n = g.vertex_count();
  if (w.dag.vertex_count() != n + w.added)
    return fail("vertex count mismatch: dag has " +
                std::to_string(w.dag.vertex_count()) + ", expected " +
                std::to_string(n + w.added));
  if (!is_acyclic(w.dag)) return fail("not acyclic");
  Graph comp = competition_graph(w.dag);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) && !comp.has_edge(u, v))
        return fail("competition graph mismatch: missing edge " + std::to_string(u) +
                    "-" + std::to_string(v));
      if (!g.has_edge(u, v) && comp.has_edge(u, v))
        return fail("competition graph mismatch: unexpected edge " + std::to_string(u) +
                    "-" + std::to_string(v));
    }
  for (int a = n; a < n + w.added; ++a)
    if (!comp.neighbors(a).empty())
      return fail("added vertex " + std::to_string(a) +
                  " is not isolated in the competition graph");
  return pass();
}

VerifyResult verify_incremental_cover(const Graph& g, const CliqueSequence& s) {
  std::size_t t = s.cliques.size();
  std::vector<int> target = s.target;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (int v : target)
    if (v < 0 || v >= g.vertex_count()) return fail("target vertex out of range");
  if (target.size() < t)
    return fail("target smaller than clique count: " + std::to_string(target.size()) +
                " < " + std::to_string(t));
  for (std::size_t i = 0; i < t; ++i)
    if (!is_clique(g, s.cliques[i]))
      return fail("clique " + std::to_string(i + 1) + " " + vec_str(s.cliques[i]) +
                  " is not a clique");

  std::set<std::pair<int, int>> covered;
  auto star_covered = [&](int v) {
    for (int u : g.neighbors(v)) {
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (!covered.count(e)) return false;
    }
    return true;
  };

  // For 1-based j in 1..t-1, the prefix C_1..C_{j+1} must cover the full
  // stars of at least j distinct target vertices.
  for (std::size_t i = 0; i < t; ++i) {
    const Clique& c = s.cliques[i];
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        covered.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
    std::size_t prefix = i + 1;
    if (prefix >= 2 && prefix < t + 1 && prefix <= t) {
      std::size_t need = prefix - 1;
      std::size_t done = 0;
      for (int v : target)
        if (star_covered(v)) ++done;
      if (done < need)
        return fail("prefix of " + std::to_string(prefix) + " cliques covers only " +
                    std::to_string(done) + " full stars, needs " + std::to_string(need));
    }
  }
  for (int v : target)
    for (int u : g.neighbors(v)) {
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (!covered.count(e))
        return fail("edge uncovered: " + std::to_string(e.first) + "-" +
                    std::to_string(e.second) + " incident with target vertex " +
                    std::to_string(v));
    }
  return pass();
}

VerifyResult verify_lm_cover(const Graph& g, const LMCover& l) {
  int n = g.vertex_count();
  if (static_cast<int>(l.ordering.size()) != n) return fail("ordering is not a permutation");
  std::vector<bool> seen(n, false);
  for (int v : l.ordering) {
    if (v < 0 || v >= n || seen[v]) return fail("ordering is not a permutation");
    seen[v] = true;
  }
  if (static_cast<int>(l.cliques.size()) != n)
    return fail("expected " + std::to_string(n) + " cliques, got " +
                std::to_string(l.cliques.size()));
  std::vector<int> position(n, 0);  // vertex -> 1-based index in the ordering
  for (int i = 0; i < n; ++i) position[l.ordering[i]] = i + 1;
  for (int j = 0; j < n; ++j) {
    if (!is_clique(g, l.cliques[j]))
      return fail("clique " + std::to_string(j + 1) + " " + vec_str(l.cliques[j]) +
                  " is not a clique");
    for (int v : l.cliques[j]) {
      if (v < 0 || v >= n) return fail("clique member out of range");
      if (position[v] >= j + 3)
        return fail("ordering constraint: v_" + std::to_string(position[v]) +
                    " appears in C_" + std::to_string(j + 1));
    }
  }
  std::set<std::pair<int, int>> covered;
  for (const Clique& c : l.cliques)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        covered.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
  for (auto [u, v] : g.edges())
    if (!covered.count({u, v}))
      return fail("edge uncovered: " + std::to_string(u) + "-" + std::to_string(v));
  return pass();
}

CpWitness dag_from_lm_cover(const Graph& g, const LMCover& l) {
  VerifyResult check = verify_lm_cover(g, l);
  if (!check) throw DomainError("dag_from_lm_cover: invalid cover: " + check.report);
  int n = g.vertex_count();
  Digraph d(n + 2);
  int a = n, b = n + 1;
  for (int j = 0; j < n; ++j) {
    int prey;
    if (j + 2 < n)
      prey = l.ordering[j + 2];  // members of C_j feed v_{j+2} (1-based j <= n-2)
    else if (j + 2 == n)
      prey = a;
    else
      prey = b;
    for (int x : l.cliques[j])
      if (!d.has_arc(x, prey)) d.add_arc(x, prey);
  }
  CpWitness w{g, d, 2, {"dag_from_lm_cover:n=" + std::to_string(n)}};
  VerifyResult v = verify_cp_witness(g, w);
  if (!v) throw InvariantViolation("dag_from_lm_cover output failed verification: " + v.report);
  return w;
}

LMCover incremental_to_lm(const Graph& g, const CliqueSequence& s) {
  int n = g.vertex_count();
  {
    std::vector<int> target = s.target;
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    if (static_cast<int>(target.size()) != n)
      throw DomainError("incremental_to_lm: sequence does not target all of V(G)");
  }
  VerifyResult check = verify_incremental_cover(g, s);
  if (!check) throw DomainError("incremental_to_lm: invalid sequence: " + check.report);

  // Pad with empty cliques to exactly n positions. Appending empty cliques
  // preserves the incremental property because after the original prefix all
  // target stars are covered.
  std::vector<Clique> cs = s.cliques;
  while (static_cast<int>(cs.size()) < n) cs.push_back({});

  // Greedy ordering: v_i's star must be covered by C_1..C_{i+1}.
  std::set<std::pair<int, int>> covered;
  auto star_covered = [&](int v) {
    for (int u : g.neighbors(v)) {
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      if (!covered.count(e)) return false;
    }
    return true;
  };
  auto absorb = [&](const Clique& c) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        covered.insert({std::min(c[a], c[b]), std::max(c[a], c[b])});
  };
  std::vector<int> order;
  std::vector<bool> chosen(n, false);
  if (n > 0) absorb(cs[0]);
  for (int i = 1; i <= n; ++i) {
    if (i < n) absorb(cs[i]);  // prefix C_1..C_{i+1}
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!chosen[v] && star_covered(v)) {
        pick = v;
        break;
      }
    if (pick < 0)
      throw InvariantViolation("incremental_to_lm: no coverable vertex at step " +
                               std::to_string(i));
    chosen[pick] = true;
    order.push_back(pick);
  }

  // Reverse the order and trim reversed cliques of early-finished vertices.
  LMCover out;
  out.ordering.resize(n);
  for (int i = 1; i <= n; ++i) out.ordering[i - 1] = order[n - i];
  out.cliques.resize(n);
  for (int i = 1; i <= n; ++i) {
    Clique c = cs[n - i];  // C_{n+1-i}, 1-based
    int cut = n - i - 1;   // drop v_1..v_{n-i-1}
    if (cut > 0) {
      std::set<int> drop(order.begin(), order.begin() + cut);
      Clique trimmed;
      for (int v : c)
        if (!drop.count(v)) trimmed.push_back(v);
      c = trimmed;
    }
    std::sort(c.begin(), c.end());
    out.cliques[i - 1] = c;
  }
  VerifyResult check2 = verify_lm_cover(g, out);
  if (!check2)
    throw InvariantViolation("incremental_to_lm output failed verification: " +
                             check2.report);
  return out;
}

CliqueSequence lm_to_incremental(const Graph& g, const LMCover& l) {
  VerifyResult check = verify_lm_cover(g, l);
  if (!check) throw DomainError("lm_to_incremental: invalid cover: " + check.report);
  CliqueSequence out;
  out.cliques.assign(l.cliques.rbegin(), l.cliques.rend());
  out.target.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.target[v] = v;
  VerifyResult check2 = verify_incremental_cover(g, out);
  if (!check2)
    throw InvariantViolation("lm_to_incremental output failed verification: " +
                             check2.report);
  return out;
}

}  // namespace cpnum
