#pragma once

#include <optional>
#include <vector>

#include "avn/distribution.hpp"
#include "avn/epr.hpp"
#include "avn/graph.hpp"
#include "avn/parallel.hpp"
#include "avn/partitions.hpp"
#include "avn/witness.hpp"

namespace avn {

/// Verdict for one distribution, with the per-qubit element-of-reality
/// table and optionally an explicit contradiction.
struct DistributionReport {
  Graph graph;
  Distribution distribution;
  bool allows = false;
  EorTable eor_table;
  std::optional<AvnWitness> witness;

  friend bool operator==(const DistributionReport& a, const DistributionReport& b) {
    return a.graph == b.graph && a.distribution.particles() == b.distribution.particles() && a.allows == b.allows &&
           a.eor_table == b.eor_table && a.witness == b.witness;
  }
};

struct SearchOptions {
  bool dedupe = true;
  int jobs = 1;
  AvnOptions avn;
  // Attach a witness to allowing reports (needs n <= 8).
  bool with_witness = false;
  WitnessSearchOptions witness;
};

inline DistributionReport make_report(const Graph& g, const Distribution& d, const SearchOptions& opts = {}) {
  auto v = allows_specific_avn(g, d, opts.avn);
  DistributionReport r{g, d, v.allows, std::move(v.table), std::nullopt};
  if (opts.with_witness && r.allows) r.witness = find_witness(g, d, opts.witness);
  return r;
}

namespace detail {

inline std::vector<DistributionReport> allowing(const Graph& g, const std::vector<Distribution>& dists, const SearchOptions& opts) {
  std::vector<std::optional<DistributionReport>> slots(dists.size());
  parallel_for(dists.size(), opts.jobs, [&](std::size_t k) {
    auto r = make_report(g, dists[k], opts);
    if (r.allows) slots[k] = std::move(r);
  });
  std::vector<DistributionReport> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace detail

struct MinPartyResult {
  int m_min = 0;
  std::vector<DistributionReport> reports;
};

/// Walks the minimal shapes in ascending party count and returns the first
/// level at which some distribution allows a specific AVN proof, with every
/// allowing distribution at that level (shape order, then canonical order).
inline MinPartyResult min_party_distributions(const Graph& g, const SearchOptions& opts = {}) {
  require_avn_input(g);
  MinPartyResult result;
  for (const auto& level : minimal_shapes(g.size())) {
    std::vector<Distribution> candidates;
    for (const auto& s : level.shapes) {
      auto ds = enumerate_distributions(g, s, opts.dedupe);
      candidates.insert(candidates.end(), ds.begin(), ds.end());
    }
    auto hits = detail::allowing(g, candidates, opts);
    if (!hits.empty()) {
      result.m_min = level.m;
      result.reports = std::move(hits);
      return result;
    }
  }
  return result;
}

/// Every (deduplicated) distribution into m particles that allows a
/// specific AVN proof. Shapes failing the size lemma are skipped.
inline std::vector<DistributionReport> all_avn_distributions(const Graph& g, int m, const SearchOptions& opts = {}) {
  require_avn_input(g);
  if (m < 1 || m > g.size()) throw ContractViolation("all_avn_distributions: m must be in 1.." + std::to_string(g.size()));
  std::vector<Distribution> candidates;
  for (const auto& s : shapes_with_parts(g.size(), m)) {
    if (!shape_feasible(s)) continue;
    auto ds = enumerate_distributions(g, s, opts.dedupe);
    candidates.insert(candidates.end(), ds.begin(), ds.end());
  }
  return detail::allowing(g, candidates, opts);
}

}  // namespace avn
