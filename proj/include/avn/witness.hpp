#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "avn/distribution.hpp"
#include "avn/epr.hpp"
#include "avn/errors.hpp"
#include "avn/gf2.hpp"
#include "avn/graph.hpp"
#include "avn/pauli.hpp"
#include "avn/stabilizer.hpp"

namespace avn {

/// A set of stabilizing operators, each named by its generator subset, whose
/// perfect correlations admit no +-1 value assignment.
struct AvnWitness {
  std::vector<Bitvec> operators;

  friend bool operator==(const AvnWitness&, const AvnWitness&) = default;
};

/// Outcome of trying to give every single-qubit observable a +-1 value.
///
/// `model` holds one bit per (qubit, X/Y/Z) variable at index 3*q + {0,1,2};
/// bit 1 means value -1. `conflict` lists operator indices whose equations
/// sum to 0 = 1.
struct AssignmentResult {
  bool consistent = false;
  std::optional<Bitvec> model;
  std::vector<std::size_t> conflict;
};

inline std::size_t assignment_variable(std::size_t qubit, PauliLetter l) { return 3 * qubit + observable_index(l); }

/// Each operator with sign e contributes "sum of its variables' bits = [e = -1]".
inline AssignmentResult assignment_consistent(const std::vector<PauliOperator>& ops) {
  if (ops.empty()) return {true, Bitvec(0), {}};
  const std::size_t n = ops.front().num_qubits();
  if (3 * n > Bitvec::kCapacity) throw ContractViolation("assignment_consistent: too many qubits");
  Gf2System sys(3 * n);
  for (const auto& op : ops) {
    if (op.num_qubits() != n) throw ContractViolation("assignment_consistent: operators act on different qubit counts");
    Bitvec row(3 * n);
    for (std::size_t q = 0; q < n; ++q) {
      const auto l = op.letter(q);
      if (l != PauliLetter::I) row.set(assignment_variable(q, l));
    }
    sys.add_row(row, sign_of(op) < 0);
  }
  auto r = gf2_analyze(sys);
  AssignmentResult out;
  out.consistent = r.consistent();
  out.model = r.solution;
  out.conflict = std::move(r.conflict);
  return out;
}

inline std::vector<PauliOperator> witness_operators(const Graph& g, const AvnWitness& w) {
  std::vector<PauliOperator> ops;
  ops.reserve(w.operators.size());
  for (const auto& s : w.operators) ops.push_back(stabilizer_element(g, s));
  return ops;
}

namespace detail {

// One bit per (qubit, letter) occurrence; XOR of these over a set is zero
// exactly when every letter appears an even number of times on every qubit.
inline std::uint64_t letter_mask(const PauliOperator& op) {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < op.num_qubits(); ++q) {
    const auto l = op.letter(q);
    if (l != PauliLetter::I) m |= std::uint64_t{1} << assignment_variable(q, l);
  }
  return m;
}

}  // namespace detail

/// Every letter occurs an even number of times on every qubit.
inline bool letter_parity_even(const std::vector<PauliOperator>& ops) {
  std::uint64_t acc = 0;
  for (const auto& op : ops) acc ^= detail::letter_mask(op);
  return acc == 0;
}

inline int sign_product(const std::vector<PauliOperator>& ops) {
  int s = 1;
  for (const auto& op : ops) s *= sign_of(op);
  return s;
}

/// Full check of a claimed contradiction: parity and sign conditions, no
/// consistent assignment, and each operator a perfect correlation on the
/// dense state.
inline bool verify_witness(const AvnWitness& w, const Graph& g) {
  if (w.operators.empty()) return false;
  for (const auto& s : w.operators) {
    if (s.size() != static_cast<std::size_t>(g.size())) return false;
  }
  const auto ops = witness_operators(g, w);
  if (!letter_parity_even(ops) || sign_product(ops) != -1) return false;
  if (assignment_consistent(ops).consistent) return false;
  if (g.size() <= StateVector::kMaxQubits) {
    const auto sv = statevector(g);
    for (const auto& op : ops) {
      if (std::abs(expectation(sv, op) - 1.0) > 1e-10) return false;
    }
  }
  return true;
}

/// Removing any single operator restores a consistent assignment.
inline bool is_critical(const std::vector<PauliOperator>& ops) {
  for (std::size_t skip = 0; skip < ops.size(); ++skip) {
    std::vector<PauliOperator> rest;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (k != skip) rest.push_back(ops[k]);
    }
    if (!assignment_consistent(rest).consistent) return false;
  }
  return true;
}

inline bool is_critical(const AvnWitness& w, const Graph& g) { return is_critical(witness_operators(g, w)); }

struct WitnessSearchOptions {
  int max_size = 4;
  // Search every nonzero stabilizing operator instead of the restricted pool.
  bool exhaustive = false;
  // Upper bound on (k-1)-combinations examined at a single level.
  double max_combinations = 2e9;
};

/// Operators the search draws from: those that certify some element of
/// reality under `d`, plus all products of at most three generators.
inline std::vector<std::uint64_t> witness_candidates(const Graph& g, const Distribution& d, bool exhaustive) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    bool keep = exhaustive || std::popcount(s) <= 3;
    for (int i = 0; i < g.size() && !keep; ++i) {
      keep = classify_action_word(s, g.neighbors(i), i) != ActionClass::IdentityOnQubit &&
             detail::identity_on(g, s, d.partners(i));
    }
    if (keep) out.push_back(s);
  }
  return out;
}

/// Smallest witness (then lexicographically least by sorted subsets) of size
/// 2..max_size drawn from the candidate pool, or nullopt.
inline std::optional<AvnWitness> find_witness(const Graph& g, const Distribution& d, const WitnessSearchOptions& opts = {}) {
  detail::check_pair(g, d);
  if (opts.max_size < 2 || opts.max_size > 8) throw ContractViolation("find_witness: max_size must be in 2..8");
  if (g.size() > 8) throw ResourceError("find_witness: limited to 8 qubits");
  if (opts.exhaustive && g.size() > 5) throw ResourceError("find_witness: exhaustive mode is limited to 5 qubits");

  const auto cands = witness_candidates(g, d, opts.exhaustive);
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::uint64_t> masks;
  std::vector<int> signs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_mask;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const auto op = stabilizer_element(g, Bitvec(n, cands[k]));
    masks.push_back(detail::letter_mask(op));
    signs.push_back(sign_of(op));
    by_mask[masks.back()].push_back(k);
  }

  const std::size_t pool = cands.size();
  for (int size = 2; size <= opts.max_size; ++size) {
    const auto head = static_cast<std::size_t>(size - 1);
    if (head > pool) break;
    double combos = 1;
    for (std::size_t t = 0; t < head; ++t) combos = combos * double(pool - t) / double(t + 1);
    if (combos > opts.max_combinations) {
      throw ResourceError("find_witness: level " + std::to_string(size) + " needs " + std::to_string(combos) + " combinations");
    }
    std::vector<std::size_t> idx(head);
    for (std::size_t t = 0; t < head; ++t) idx[t] = t;
    while (true) {
      std::uint64_t acc = 0;
      int sign = 1;
      for (auto t : idx) {
        acc ^= masks[t];
        sign *= signs[t];
      }
      if (auto it = by_mask.find(acc); it != by_mask.end()) {
        for (auto last : it->second) {
          if (last <= idx.back() || sign * signs[last] != -1) continue;
          AvnWitness w;
          for (auto t : idx) w.operators.emplace_back(n, cands[t]);
          w.operators.emplace_back(n, cands[last]);
          if (verify_witness(w, g)) return w;
        }
      }
      std::size_t t = head;
      while (t > 0 && idx[t - 1] == pool - head + (t - 1)) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t u = t; u < head; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return std::nullopt;
}

/// 0-based qubits on which the witness uses fewer than two distinct observables.
inline std::vector<int> underused_qubits(const AvnWitness& w, const Graph& g) {
  std::vector<int> out;
  const auto ops = witness_operators(g, w);
  for (int q = 0; q < g.size(); ++q) {
    unsigned seen = 0;
    for (const auto& op : ops) {
      const auto l = op.letter(static_cast<std::size_t>(q));
      if (l != PauliLetter::I) seen |= 1u << observable_index(l);
    }
    if (std::popcount(seen) < 2) out.push_back(q);
  }
  return out;
}

/// "-X1 X2 X3 Z4 = 1"
inline std::string format_equation(const PauliOperator& op) { return op.to_string() + " = 1"; }

}  // namespace avn
