#pragma once

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avn/errors.hpp"
#include "avn/gf2.hpp"

namespace avn {

/// Simple undirected graph on at most 16 vertices.
///
/// Vertices are 0-based internally; the text format and every report use
/// 1-based labels. Adjacency is one neighbor bitmask per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw ContractViolation("Graph: vertex count " + std::to_string(n) + " outside 1..16");
    }
  }

  Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  // Parses `n: i-j, i-j, ...` (1-based, whitespace-insensitive). Duplicate
  // edges and self-loops are rejected.
  static Graph parse(std::string_view text);

  int size() const noexcept { return n_; }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  Bitvec neighbor_set(int v) const { return Bitvec(static_cast<std::size_t>(n_), neighbors(v)); }
  int degree(int v) const { return std::popcount(neighbors(v)); }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return (adj_[static_cast<std::size_t>(a)] >> b) & 1u;
  }

  void add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw ContractViolation("Graph: self-loop at vertex " + std::to_string(a + 1));
    if (has_edge(a, b)) {
      throw ContractViolation("Graph: duplicate edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
    }
    toggle_edge(a, b);
  }

  void toggle_edge(int a, int b) {
    adj_[static_cast<std::size_t>(a)] ^= std::uint64_t{1} << b;
    adj_[static_cast<std::size_t>(b)] ^= std::uint64_t{1} << a;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // Edges (a, b) with a < b, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (has_edge(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_connected() const {
    if (n_ == 0) return false;
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t w = frontier; w != 0; w &= w - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(w))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  }

  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw ContractViolation("Graph::permuted: permutation size mismatch");
    Graph out(n_);
    for (auto [a, b] : edges()) out.toggle_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return out;
  }

  // `4: 1-2, 2-3, 3-4`
  std::string to_string() const {
    std::string s = std::to_string(n_) + ":";
    bool first = true;
    for (auto [a, b] : edges()) {
      s += first ? " " : ", ";
      s += std::to_string(a + 1) + "-" + std::to_string(b + 1);
      first = false;
    }
    return s;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw ContractViolation("Graph: vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline Graph Graph::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    const std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 1000) throw ParseError(std::string(what) + " is too large", start);
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return std::pair{static_cast<int>(value), start};
  };

  const auto [n, n_pos] = read_int("vertex count");
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count must be in 1..16", n_pos);
  skip_ws();
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after vertex count", pos);
  ++pos;
  Graph g(n);
  skip_ws();
  if (pos == text.size()) return g;
  while (true) {
    const auto [a, a_pos] = read_int("vertex");
    skip_ws();
    if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-' between edge endpoints", pos);
    ++pos;
    const auto [b, b_pos] = read_int("vertex");
    if (a < 1 || a > n) throw ParseError("vertex " + std::to_string(a) + " outside 1.." + std::to_string(n), a_pos);
    if (b < 1 || b > n) throw ParseError("vertex " + std::to_string(b) + " outside 1.." + std::to_string(n), b_pos);
    if (a == b) throw ParseError("self-loop " + std::to_string(a) + "-" + std::to_string(b), a_pos);
    if (g.has_edge(a - 1, b - 1)) {
      throw ParseError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b), a_pos);
    }
    g.toggle_edge(a - 1, b - 1);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' between edges", pos);
    ++pos;
  }
  return g;
}

// Named families, all with the conventional 1..n labeling.

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph ring_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// Vertex 1 is the center.
inline Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace avn
