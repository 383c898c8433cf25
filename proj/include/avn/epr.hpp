#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "avn/distribution.hpp"
#include "avn/errors.hpp"
#include "avn/gf2.hpp"
#include "avn/graph.hpp"
#include "avn/pauli.hpp"
#include "avn/stabilizer.hpp"

namespace avn {

/// What a stabilizing operator does on one qubit: predicts X, Y or Z there
/// from the other qubits' outcomes, or leaves it alone.
enum class ActionClass { PredictsX, PredictsY, PredictsZ, IdentityOnQubit };

inline ActionClass classify_action_word(std::uint64_t subset, std::uint64_t neighbors, int i) {
  const bool contains = (subset >> i) & 1u;
  const bool odd = std::popcount(subset & neighbors) & 1;
  if (contains) return odd ? ActionClass::PredictsY : ActionClass::PredictsX;
  return odd ? ActionClass::PredictsZ : ActionClass::IdentityOnQubit;
}

inline ActionClass classify_action(const Bitvec& subset, const Graph& g, int i) {
  if (subset.size() != static_cast<std::size_t>(g.size())) {
    throw ContractViolation("classify_action: subset length does not match the graph");
  }
  return classify_action_word(subset.word(), g.neighbors(i), i);
}

inline ActionClass predicts(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return ActionClass::PredictsX;
    case PauliLetter::Y: return ActionClass::PredictsY;
    case PauliLetter::Z: return ActionClass::PredictsZ;
    default: throw ContractViolation("element of reality: the observable must be X, Y or Z");
  }
}

/// Generator subset whose stabilizing operator predicts `pauli` on `qubit`
/// while acting as identity on every other qubit of the same particle.
struct EoRWitness {
  int qubit = 0;
  PauliLetter pauli = PauliLetter::X;
  Bitvec subset;

  friend bool operator==(const EoRWitness&, const EoRWitness&) = default;
};

enum class EorMethod { Solver, BruteForce };

// Thrown when two independent routes disagree; always a bug.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_pair(const Graph& g, const Distribution& d) {
  if (d.num_qubits() != g.size()) {
    throw ContractViolation("distribution covers " + std::to_string(d.num_qubits()) + " qubits but the graph has " +
                            std::to_string(g.size()));
  }
}

// Does `subset` act as identity on every qubit of `mask`?
inline bool identity_on(const Graph& g, std::uint64_t subset, std::uint64_t mask) {
  for (std::uint64_t w = mask; w != 0; w &= w - 1) {
    const int j = std::countr_zero(w);
    if (classify_action_word(subset, g.neighbors(j), j) != ActionClass::IdentityOnQubit) return false;
  }
  return true;
}

}  // namespace detail

/// Re-checks a witness against the graph and distribution directly.
inline bool certifies(const Graph& g, const Distribution& d, const EoRWitness& w) {
  detail::check_pair(g, d);
  if (w.subset.size() != static_cast<std::size_t>(g.size())) return false;
  return classify_action(w.subset, g, w.qubit) == predicts(w.pauli) &&
         detail::identity_on(g, w.subset.word(), d.partners(w.qubit));
}

/// The parity constraints for "pauli on qubit i is an element of reality"
/// as a GF(2) system over the generator-selection bits.
inline Gf2System eor_system(const Graph& g, const Distribution& d, int i, PauliLetter pauli) {
  const auto n = static_cast<std::size_t>(g.size());
  const ActionClass target = predicts(pauli);
  Gf2System sys(n);
  for (std::uint64_t w = d.partners(i); w != 0; w &= w - 1) {
    const int j = std::countr_zero(w);
    sys.fix(static_cast<std::size_t>(j), false);
    sys.add_row(g.neighbor_set(j), false);
  }
  sys.fix(static_cast<std::size_t>(i), target != ActionClass::PredictsZ);
  sys.add_row(g.neighbor_set(i), target != ActionClass::PredictsX);
  return sys;
}

inline std::optional<EoRWitness> eor_by_solver(const Graph& g, const Distribution& d, int i, PauliLetter pauli) {
  auto solution = gf2_solve(eor_system(g, d, i, pauli));
  if (!solution) return std::nullopt;
  EoRWitness w{i, pauli, *solution};
  if (!certifies(g, d, w)) throw OracleMismatch("solver returned a subset that does not certify " + std::string(1, letter_char(pauli)) + std::to_string(i + 1));
  return w;
}

// Lowest subset in ascending order that certifies the observable.
inline std::optional<EoRWitness> eor_by_enumeration(const Graph& g, const Distribution& d, int i, PauliLetter pauli) {
  const ActionClass target = predicts(pauli);
  const std::uint64_t count = std::uint64_t{1} << g.size();
  const std::uint64_t partners = d.partners(i);
  for (std::uint64_t s = 0; s < count; ++s) {
    if (classify_action_word(s, g.neighbors(i), i) == target && detail::identity_on(g, s, partners)) {
      return EoRWitness{i, pauli, Bitvec(static_cast<std::size_t>(g.size()), s)};
    }
  }
  return std::nullopt;
}

/// Decides whether `pauli` on qubit `i` is an element of reality under `d`,
/// returning a certifying generator subset when it is.
inline std::optional<EoRWitness> is_element_of_reality(const Graph& g, const Distribution& d, int i, PauliLetter pauli,
                                                       EorMethod method = EorMethod::Solver) {
  detail::check_pair(g, d);
  if (i < 0 || i >= g.size()) throw ContractViolation("is_element_of_reality: qubit out of range");
  if (method == EorMethod::BruteForce) {
    if (g.size() > 20) throw ResourceError("brute-force element-of-reality check is limited to small graphs");
    return eor_by_enumeration(g, d, i, pauli);
  }
  return eor_by_solver(g, d, i, pauli);
}

inline constexpr std::array<PauliLetter, 3> kObservables{PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

inline std::size_t observable_index(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return 0;
    case PauliLetter::Y: return 1;
    case PauliLetter::Z: return 2;
    default: throw ContractViolation("observable_index: identity has no slot");
  }
}

/// Per-qubit, per-observable witness or absence.
struct EorTable {
  std::vector<std::array<std::optional<Bitvec>, 3>> entries;

  const std::optional<Bitvec>& at(int qubit, PauliLetter l) const {
    return entries.at(static_cast<std::size_t>(qubit))[observable_index(l)];
  }

  // Every X_i and Y_i has a witness.
  bool all_x_and_y() const {
    for (const auto& row : entries) {
      if (!row[0] || !row[1]) return false;
    }
    return true;
  }

  friend bool operator==(const EorTable&, const EorTable&) = default;
};

inline EorTable eor_table(const Graph& g, const Distribution& d, EorMethod method = EorMethod::Solver) {
  detail::check_pair(g, d);
  EorTable t;
  t.entries.resize(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    for (auto l : kObservables) {
      if (auto w = is_element_of_reality(g, d, i, l, method)) {
        t.entries[static_cast<std::size_t>(i)][observable_index(l)] = w->subset;
      }
    }
  }
  return t;
}

/// Quick rejections that need no linear algebra.
enum class Shortcut {
  None,
  OversizedParticle,           // some particle carries more than n/2 qubits
  NeighborhoodInsideParticle,  // some qubit is connected only to its own particle
};

inline const char* shortcut_name(Shortcut s) {
  switch (s) {
    case Shortcut::OversizedParticle: return "oversized-particle";
    case Shortcut::NeighborhoodInsideParticle: return "neighborhood-inside-particle";
    default: return "none";
  }
}

struct AvnVerdict {
  bool allows = false;
  EorTable table;
  Shortcut shortcut = Shortcut::None;
  int shortcut_subject = -1;  // particle or qubit index the shortcut fired on
};

inline std::pair<Shortcut, int> find_shortcut(const Graph& g, const Distribution& d) {
  for (int k = 0; k < d.num_particles(); ++k) {
    if (2 * std::popcount(d.particle_mask(k)) > g.size()) return {Shortcut::OversizedParticle, k};
  }
  for (int i = 0; i < g.size(); ++i) {
    if ((g.neighbors(i) & ~d.partners(i)) == 0) return {Shortcut::NeighborhoodInsideParticle, i};
  }
  return {Shortcut::None, -1};
}

struct AvnOptions {
  EorMethod method = EorMethod::Solver;
  // Re-derive the table by enumeration and evaluate every witness on the
  // statevector; throws OracleMismatch on any disagreement.
  bool oracle = false;
};

inline void require_avn_input(const Graph& g) {
  if (g.size() < 3) throw UnsupportedInput("AVN analysis needs at least 3 qubits");
  if (!g.is_connected()) throw UnsupportedInput("AVN analysis needs a connected graph");
}

inline void cross_check_table(const Graph& g, const Distribution& d, const EorTable& table) {
  const EorTable other = eor_table(g, d, EorMethod::BruteForce);
  const auto sv = g.size() <= StateVector::kMaxQubits ? std::optional(statevector(g)) : std::nullopt;
  for (int i = 0; i < g.size(); ++i) {
    for (auto l : kObservables) {
      const auto& a = table.at(i, l);
      const auto& b = other.at(i, l);
      if (a.has_value() != b.has_value()) {
        throw OracleMismatch("solver and enumeration disagree on " + std::string(1, letter_char(l)) + std::to_string(i + 1));
      }
      if (a && sv) {
        const double e = expectation(*sv, stabilizer_element(g, *a));
        if (std::abs(e - 1.0) > 1e-10) {
          throw OracleMismatch("witness for " + std::string(1, letter_char(l)) + std::to_string(i + 1) +
                               " is not a perfect correlation");
        }
      }
    }
  }
}

/// Decides whether distribution `d` of the graph state allows a specific AVN
/// proof: all X_i and Y_i must be elements of reality.
inline AvnVerdict allows_specific_avn(const Graph& g, const Distribution& d, const AvnOptions& opts = {}) {
  require_avn_input(g);
  detail::check_pair(g, d);
  AvnVerdict v;
  std::tie(v.shortcut, v.shortcut_subject) = find_shortcut(g, d);
  v.table = eor_table(g, d, opts.method);
  v.allows = v.table.all_x_and_y();
  for (int i = 0; i < g.size(); ++i) {
    if (v.table.at(i, PauliLetter::X) && v.table.at(i, PauliLetter::Y) && !v.table.at(i, PauliLetter::Z)) {
      throw OracleMismatch("X and Y are elements of reality on qubit " + std::to_string(i + 1) + " but Z is not");
    }
  }
  if (v.shortcut != Shortcut::None && v.allows) {
    throw OracleMismatch(std::string("shortcut '") + shortcut_name(v.shortcut) + "' rejects a distribution the full check allows");
  }
  if (opts.oracle) cross_check_table(g, d, v.table);
  return v;
}

/// Letters of every stabilizing operator restricted to one particle's
/// qubits (ascending qubit order, signs dropped), with multiplicities.
inline std::map<std::string, std::size_t> reduced_stabilizer(const Graph& g, const Distribution& d, int particle) {
  detail::check_pair(g, d);
  if (particle < 0 || particle >= d.num_particles()) throw ContractViolation("reduced_stabilizer: particle out of range");
  std::vector<int> qubits;
  for (std::uint64_t w = d.particle_mask(particle); w != 0; w &= w - 1) qubits.push_back(std::countr_zero(w));
  std::map<std::string, std::size_t> counts;
  const std::uint64_t total = std::uint64_t{1} << g.size();
  std::string key(qubits.size(), 'I');
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      const int q = qubits[k];
      switch (classify_action_word(s, g.neighbors(q), q)) {
        case ActionClass::PredictsX: key[k] = 'X'; break;
        case ActionClass::PredictsY: key[k] = 'Y'; break;
        case ActionClass::PredictsZ: key[k] = 'Z'; break;
        default: key[k] = 'I'; break;
      }
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace avn
