#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "avn/distribution.hpp"
#include "avn/errors.hpp"
#include "avn/graph.hpp"

namespace avn {

/// Particle sizes of a distribution, non-increasing.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw ContractViolation("Shape: no parts");
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
      if (sizes_[k] < 1) throw ContractViolation("Shape: parts must be positive");
      if (k && sizes_[k] > sizes_[k - 1]) throw ContractViolation("Shape: parts must be non-increasing");
    }
  }

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int parts() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  int largest() const { return sizes_.front(); }

  // "(3,3,1)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(sizes_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> sizes_;
};

/// Largest particle no bigger than all the others together.
inline bool shape_feasible(const Shape& s) { return s.largest() <= s.total() - s.largest(); }

/// All shapes of n into exactly m parts, lexicographically descending.
inline std::vector<Shape> shapes_with_parts(int n, int m) {
  std::vector<Shape> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int remaining, int parts_left, int cap) {
    if (parts_left == 0) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    for (int v = std::min(cap, remaining - (parts_left - 1)); v >= 1; --v) {
      if (v * parts_left < remaining) break;
      cur.push_back(v);
      rec(remaining - v, parts_left - 1, v);
      cur.pop_back();
    }
  };
  if (n >= 1 && m >= 1 && m <= n) rec(n, m, n);
  return out;
}

/// Whether a shape can be the minimal party count of some state, i.e. is not
/// already covered by a coarser shape. Besides feasibility this requires
///  - the largest particle fits inside the other non-singleton particles
///    (singletons alone cannot balance it), and
///  - a particle of exactly n/2 qubits only with m = 2,
/// except for the all-singleton shape which is always available.
inline bool shape_minimal(const Shape& s) {
  const int n = s.total();
  if (s.parts() == n) return n >= 2;
  if (!shape_feasible(s)) return false;
  int others = 0;
  for (std::size_t k = 1; k < s.sizes().size(); ++k) {
    if (s.sizes()[k] >= 2) others += s.sizes()[k];
  }
  if (s.largest() > others) return false;
  return !(2 * s.largest() == n && s.parts() > 2);
}

struct ShapeLevel {
  int m = 0;
  std::vector<Shape> shapes;

  friend bool operator==(const ShapeLevel&, const ShapeLevel&) = default;
};

/// Possible minimum party counts for n qubits with their shapes, ascending m.
inline std::vector<ShapeLevel> minimal_shapes(int n) {
  if (n < 2 || n > 16) throw ContractViolation("minimal_shapes: n must be in 2..16");
  std::vector<ShapeLevel> out;
  for (int m = 2; m <= n; ++m) {
    ShapeLevel level{m, {}};
    for (auto& s : shapes_with_parts(n, m)) {
      if (shape_minimal(s)) level.shapes.push_back(std::move(s));
    }
    if (!level.shapes.empty()) out.push_back(std::move(level));
  }
  return out;
}

/// Adjacency-preserving vertex permutations (perm[v] = image of v),
/// lexicographically ascending.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.size();
  if (n > 10) throw ResourceError("automorphisms: limited to 10 vertices");
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(perm);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if ((used >> img) & 1u) continue;
      if (g.degree(img) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.has_edge(u, v) == g.has_edge(perm[static_cast<std::size_t>(u)], img);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(v)] = img;
      used |= std::uint64_t{1} << img;
      rec(v + 1);
      used &= ~(std::uint64_t{1} << img);
    }
    perm[static_cast<std::size_t>(v)] = -1;
  };
  rec(0);
  return out;
}

namespace detail {

// Every set partition of {0..n-1} whose block sizes are `s`, blocks as masks
// ordered by smallest element.
inline std::vector<std::vector<std::uint64_t>> partitions_of_shape(int n, const Shape& s) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<int> remaining = s.sizes();  // multiset, non-increasing
  std::vector<std::uint64_t> blocks;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  std::function<void(std::uint64_t)> rec = [&](std::uint64_t assigned) {
    if (assigned == all) {
      out.push_back(blocks);
      return;
    }
    const int first = std::countr_zero(~assigned);
    const std::uint64_t free_rest = all & ~assigned & ~(std::uint64_t{1} << first);
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      if (k && remaining[k] == remaining[k - 1]) continue;  // distinct sizes only
      const int size = remaining[k];
      if (std::popcount(free_rest) < size - 1) continue;
      const int taken = remaining[k];
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
      // choose size-1 companions from free_rest, ascending combinations
      std::vector<int> pool;
      for (std::uint64_t w = free_rest; w != 0; w &= w - 1) pool.push_back(std::countr_zero(w));
      std::vector<int> idx(static_cast<std::size_t>(size - 1));
      std::iota(idx.begin(), idx.end(), 0);
      const int p = static_cast<int>(pool.size());
      while (true) {
        std::uint64_t block = std::uint64_t{1} << first;
        for (int j : idx) block |= std::uint64_t{1} << pool[static_cast<std::size_t>(j)];
        blocks.push_back(block);
        rec(assigned | block);
        blocks.pop_back();
        int t = size - 2;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == p - (size - 1) + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < size - 1; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
      }
      remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(k), taken);
    }
  };
  rec(0);
  return out;
}

inline std::vector<std::vector<int>> blocks_to_particles(const std::vector<std::uint64_t>& blocks) {
  std::vector<std::vector<int>> parts;
  for (auto b : blocks) {
    std::vector<int> p;
    for (std::uint64_t w = b; w != 0; w &= w - 1) p.push_back(std::countr_zero(w));
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

inline std::vector<std::uint64_t> permute_blocks(const std::vector<std::uint64_t>& blocks, const std::vector<int>& perm) {
  std::vector<std::uint64_t> out;
  out.reserve(blocks.size());
  for (auto b : blocks) {
    std::uint64_t img = 0;
    for (std::uint64_t w = b; w != 0; w &= w - 1) img |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(w))];
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Every distribution of g's qubits with particle sizes `s`, canonically
/// sorted. With `dedupe`, only the least member of each orbit under the
/// graph's automorphism group is kept.
inline std::vector<Distribution> enumerate_distributions(const Graph& g, const Shape& s, bool dedupe) {
  const int n = g.size();
  if (s.total() != n) throw ContractViolation("enumerate_distributions: shape " + s.to_string() + " does not sum to " + std::to_string(n));
  auto raw = detail::partitions_of_shape(n, s);
  std::vector<std::pair<std::vector<std::vector<int>>, std::vector<std::uint64_t>>> items;
  items.reserve(raw.size());
  for (auto& blocks : raw) items.emplace_back(detail::blocks_to_particles(blocks), std::move(blocks));
  std::sort(items.begin(), items.end());

  std::vector<Distribution> out;
  if (!dedupe) {
    for (auto& [parts, blocks] : items) out.emplace_back(n, std::move(parts));
    return out;
  }
  const auto autos = automorphisms(g);
  std::set<std::vector<std::uint64_t>> seen;
  for (auto& [parts, blocks] : items) {
    auto key = blocks;
    std::sort(key.begin(), key.end());
    if (seen.count(key)) continue;
    for (const auto& perm : autos) seen.insert(detail::permute_blocks(blocks, perm));
    out.emplace_back(n, std::move(parts));
  }
  return out;
}

/// All set partitions of n qubits, every shape, canonically sorted.
inline std::vector<Distribution> all_partitions(int n) {
  std::vector<Distribution> out;
  Graph empty(n);
  for (int m = 1; m <= n; ++m) {
    for (const auto& s : shapes_with_parts(n, m)) {
      auto level = enumerate_distributions(empty, s, false);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace avn
