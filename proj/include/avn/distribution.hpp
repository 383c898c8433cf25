#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avn/errors.hpp"
#include "avn/gf2.hpp"

namespace avn {

/// A partition of qubits into particles.
///
/// Keeps the particles (and qubits within them) in the order the caller gave
/// so reports can echo it back; everything that compares or hashes uses the
/// canonical form: particles sorted by smallest qubit, qubits ascending.
class Distribution {
 public:
  Distribution() = default;

  // 0-based qubits.
  Distribution(int n, std::vector<std::vector<int>> particles) : n_(n), particles_(std::move(particles)) {
    if (n < 1 || n > 16) throw ContractViolation("Distribution: qubit count outside 1..16");
    owner_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < particles_.size(); ++k) {
      if (particles_[k].empty()) throw ContractViolation("Distribution: empty particle");
      for (int q : particles_[k]) {
        if (q < 0 || q >= n) throw ContractViolation("Distribution: qubit " + std::to_string(q + 1) + " outside 1.." + std::to_string(n));
        if (owner_[static_cast<std::size_t>(q)] != -1) {
          throw ContractViolation("Distribution: qubit " + std::to_string(q + 1) + " assigned twice");
        }
        owner_[static_cast<std::size_t>(q)] = static_cast<int>(k);
      }
    }
    for (int q = 0; q < n; ++q) {
      if (owner_[static_cast<std::size_t>(q)] == -1) {
        throw ContractViolation("Distribution: qubit " + std::to_string(q + 1) + " not assigned to any particle");
      }
    }
    masks_.assign(particles_.size(), 0);
    for (std::size_t k = 0; k < particles_.size(); ++k) {
      for (int q : particles_[k]) masks_[k] |= std::uint64_t{1} << q;
    }
  }

  // Parses `1,4,5|2,3,6` (1-based) for an n-qubit state.
  static Distribution parse(std::string_view text, int n);

  static Distribution singletons(int n) {
    std::vector<std::vector<int>> parts;
    for (int q = 0; q < n; ++q) parts.push_back({q});
    return Distribution(n, std::move(parts));
  }

  int num_qubits() const noexcept { return n_; }
  int num_particles() const noexcept { return static_cast<int>(particles_.size()); }

  // Caller order.
  const std::vector<std::vector<int>>& particles() const noexcept { return particles_; }

  std::vector<std::vector<int>> canonical_particles() const {
    auto parts = particles_;
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return parts;
  }

  Distribution canonical() const { return Distribution(n_, canonical_particles()); }

  int particle_of(int q) const { return owner_.at(static_cast<std::size_t>(q)); }
  std::uint64_t particle_mask(int k) const { return masks_.at(static_cast<std::size_t>(k)); }

  // P(i): the other qubits in i's particle.
  std::uint64_t partners(int q) const { return particle_mask(particle_of(q)) & ~(std::uint64_t{1} << q); }
  Bitvec partner_set(int q) const { return Bitvec(static_cast<std::size_t>(n_), partners(q)); }

  // Particle sizes, non-increasing.
  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& p : particles_) s.push_back(static_cast<int>(p.size()));
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

  // Image of the partition under the vertex relabeling q -> perm[q].
  Distribution permuted(std::span<const int> perm) const {
    auto parts = particles_;
    for (auto& p : parts) {
      for (auto& q : p) q = perm[static_cast<std::size_t>(q)];
    }
    return Distribution(n_, std::move(parts)).canonical();
  }

  // True if every particle of *this lies inside one particle of `coarser`.
  bool refines(const Distribution& coarser) const {
    if (coarser.n_ != n_) return false;
    return std::all_of(masks_.begin(), masks_.end(), [&](std::uint64_t m) {
      return std::any_of(coarser.masks_.begin(), coarser.masks_.end(),
                         [&](std::uint64_t c) { return (m & ~c) == 0; });
    });
  }

  // Caller order, 1-based: `1,4,5|2,3,6`.
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < particles_.size(); ++k) {
      if (k) s += '|';
      for (std::size_t j = 0; j < particles_[k].size(); ++j) {
        if (j) s += ',';
        s += std::to_string(particles_[k][j] + 1);
      }
    }
    return s;
  }

  // Equality is equality of partitions, not of presentation order.
  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.n_ == b.n_ && a.canonical_particles() == b.canonical_particles();
  }
  friend bool operator<(const Distribution& a, const Distribution& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.canonical_particles() < b.canonical_particles();
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> particles_;
  std::vector<int> owner_;
  std::vector<std::uint64_t> masks_;
};

inline Distribution Distribution::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> parts(1);
  std::vector<std::size_t> seen_at(static_cast<std::size_t>(n), std::string_view::npos);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    int q = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      q = q * 10 + (text[pos++] - '0');
      if (q > 1000) throw ParseError("qubit index is too large", start);
    }
    if (pos == start) throw ParseError("expected a qubit index", start);
    if (q < 1 || q > n) throw ParseError("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n), start);
    if (seen_at[static_cast<std::size_t>(q - 1)] != std::string_view::npos) {
      throw ParseError("qubit " + std::to_string(q) + " listed twice", start);
    }
    seen_at[static_cast<std::size_t>(q - 1)] = start;
    parts.back().push_back(q - 1);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == '|') {
      ++pos;
      parts.emplace_back();
    } else {
      throw ParseError("expected ',' or '|'", pos);
    }
  }
  for (int q = 0; q < n; ++q) {
    if (seen_at[static_cast<std::size_t>(q)] == std::string_view::npos) {
      throw ParseError("qubit " + std::to_string(q + 1) + " is not assigned to any particle", text.size());
    }
  }
  return Distribution(n, std::move(parts));
}

}  // namespace avn
