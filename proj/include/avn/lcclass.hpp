#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "avn/errors.hpp"
#include "avn/graph.hpp"
#include "avn/parallel.hpp"
#include "avn/partitions.hpp"

namespace avn {

/// Complements the subgraph induced on the neighborhood of `v`.
inline Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw ContractViolation("local_complement: vertex " + std::to_string(v + 1) + " out of range");
  Graph out = g;
  const std::uint64_t nb = g.neighbors(v);
  for (std::uint64_t a = nb; a != 0; a &= a - 1) {
    const int i = std::countr_zero(a);
    for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) out.toggle_edge(i, std::countr_zero(b));
  }
  return out;
}

/// Edge bitstring of a graph, pairs (i, j) with i < j ordered by j then i,
/// first pair in the most significant used bit. Numeric order on codes is
/// lexicographic order on bitstrings.
using GraphCode = std::uint64_t;

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline GraphCode graph_code(const Graph& g) {
  GraphCode code = 0;
  for (int j = 1; j < g.size(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | GraphCode(g.has_edge(i, j));
  }
  return code;
}

inline Graph graph_from_code(int n, GraphCode code) {
  Graph g(n);
  int bit = pair_count(n) - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1u) g.toggle_edge(i, j);
    }
  }
  return g;
}

/// Lexicographically least code over all relabelings, with the relabeling
/// (`perm[v]` = canonical position of original vertex v) that achieves it.
struct CanonicalGraph {
  int n = 0;
  GraphCode code = 0;
  std::vector<int> perm;

  Graph graph() const { return graph_from_code(n, code); }
};

inline constexpr int kMaxCanonicalVertices = 10;

/// Exact minimum by branch and bound: vertices are placed one canonical
/// position at a time, and the column of bits a placement fixes is compared
/// against the best prefix so far. Only minimal-column placements survive.
inline CanonicalGraph canonical_form(const Graph& g) {
  const int n = g.size();
  if (n > kMaxCanonicalVertices) throw ResourceError("canonical_form: limited to 10 vertices");
  constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(static_cast<std::size_t>(n), kUnset);
  std::vector<int> order(static_cast<std::size_t>(n)), best_order;
  bool have_leaf = false;

  std::function<void(int, std::uint64_t)> rec = [&](int k, std::uint64_t used) {
    if (k == n) {
      if (!have_leaf) {
        best_order = order;
        have_leaf = true;
      }
      return;
    }
    std::uint64_t cols[Graph::kMaxVertices];
    std::uint64_t lo = kUnset;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint64_t c = 0;
      const std::uint64_t nb = g.neighbors(v);
      for (int t = 0; t < k; ++t) c = (c << 1) | ((nb >> order[static_cast<std::size_t>(t)]) & 1u);
      cols[v] = c;
      lo = std::min(lo, c);
    }
    auto& bk = best[static_cast<std::size_t>(k)];
    if (lo > bk) return;
    if (lo < bk) {
      bk = lo;
      std::fill(best.begin() + k + 1, best.end(), kUnset);
      have_leaf = false;
    }
    for (int v = 0; v < n; ++v) {
      if (((used >> v) & 1u) || cols[v] != lo) continue;
      order[static_cast<std::size_t>(k)] = v;
      rec(k + 1, used | (std::uint64_t{1} << v));
    }
  };
  rec(0, 0);

  CanonicalGraph out;
  out.n = n;
  for (int k = 1; k < n; ++k) out.code = (out.code << k) | best[static_cast<std::size_t>(k)];
  out.perm.assign(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) out.perm[static_cast<std::size_t>(best_order[static_cast<std::size_t>(k)])] = k;
  return out;
}

/// Canonical codes of every graph reachable from g by local complementations.
inline std::set<GraphCode> lc_orbit(const Graph& g) {
  if (!g.is_connected()) throw UnsupportedInput("lc_orbit: graph must be connected");
  if (g.size() > kMaxCanonicalVertices) throw ResourceError("lc_orbit: limited to 10 vertices");
  const int n = g.size();
  std::set<GraphCode> seen{canonical_form(g).code};
  std::deque<GraphCode> queue{*seen.begin()};
  while (!queue.empty()) {
    const Graph cur = graph_from_code(n, queue.front());
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      const auto code = canonical_form(local_complement(cur, v)).code;
      if (seen.insert(code).second) queue.push_back(code);
    }
  }
  return seen;
}

/// Canonical codes of all connected graphs on n vertices, ascending. Each
/// (n+1)-vertex connected graph has a vertex whose removal keeps it
/// connected, so extending every n-vertex connected graph by one vertex with
/// a nonempty neighborhood reaches all of them.
inline std::vector<GraphCode> connected_graphs(int n, int jobs = 1) {
  if (n < 1 || n > kMaxCanonicalVertices) throw ResourceError("connected_graphs: n must be in 1..10");
  std::vector<GraphCode> level{0};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<GraphCode>> found(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t idx) {
      const Graph base = graph_from_code(k, level[idx]);
      std::set<GraphCode> local;
      for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << k); ++nb) {
        Graph ext(k + 1);
        for (auto [a, b] : base.edges()) ext.toggle_edge(a, b);
        for (std::uint64_t w = nb; w != 0; w &= w - 1) ext.toggle_edge(std::countr_zero(w), k);
        local.insert(canonical_form(ext).code);
      }
      found[idx].assign(local.begin(), local.end());
    });
    std::set<GraphCode> merged;
    for (const auto& f : found) merged.insert(f.begin(), f.end());
    level.assign(merged.begin(), merged.end());
  }
  return level;
}

/// Same set by filtering every edge set; only practical for small n.
inline std::vector<GraphCode> connected_graphs_by_filtering(int n) {
  if (n < 1 || n > 7) throw ResourceError("connected_graphs_by_filtering: n must be in 1..7");
  std::set<GraphCode> out;
  const int pairs = pair_count(n);
  for (GraphCode code = 0; code < (GraphCode{1} << pairs); ++code) {
    const Graph g = graph_from_code(n, code);
    if (g.is_connected()) out.insert(canonical_form(g).code);
  }
  return {out.begin(), out.end()};
}

/// One graph-state class under local complementation and isomorphism.
struct ClassRecord {
  int class_id = 0;  // 1-based, in ascending order of representative code
  int n = 0;
  Graph representative;  // least canonical code in the orbit
  GraphCode code = 0;
  std::size_t orbit_size = 0;  // non-isomorphic graphs in the orbit
  std::size_t automorphisms = 0;
};

inline std::vector<ClassRecord> classify_all(int n, int jobs = 1) {
  if (n < 2) throw ContractViolation("classify_all: n must be at least 2");
  if (n > 8) throw ResourceError("classify_all: limited to 8 qubits");
  const auto graphs = connected_graphs(n, jobs);
  std::set<GraphCode> assigned;
  std::vector<ClassRecord> out;
  for (auto code : graphs) {
    if (assigned.count(code)) continue;
    const Graph rep = graph_from_code(n, code);
    const auto orbit = lc_orbit(rep);
    assigned.insert(orbit.begin(), orbit.end());
    ClassRecord r;
    r.class_id = static_cast<int>(out.size()) + 1;
    r.n = n;
    r.representative = rep;
    r.code = code;
    r.orbit_size = orbit.size();
    out.push_back(std::move(r));
  }
  parallel_for(out.size(), jobs, [&](std::size_t k) { out[k].automorphisms = automorphisms(out[k].representative).size(); });
  return out;
}

}  // namespace avn
