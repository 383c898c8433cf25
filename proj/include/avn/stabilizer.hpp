#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iterator>
#include <vector>

#include "avn/errors.hpp"
#include "avn/gf2.hpp"
#include "avn/graph.hpp"
#include "avn/pauli.hpp"

namespace avn {

/// Generator g_i: X on vertex i, Z on each neighbor, phase 0.
inline std::vector<PauliOperator> generators(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<PauliOperator> out;
  out.reserve(n);
  for (int i = 0; i < g.size(); ++i) {
    Bitvec x(n);
    x.set(static_cast<std::size_t>(i));
    out.emplace_back(x, g.neighbor_set(i), 0);
  }
  return out;
}

/// Product of the generators selected by `subset`, in ascending index order.
inline PauliOperator stabilizer_element(const Graph& g, const Bitvec& subset) {
  const auto n = static_cast<std::size_t>(g.size());
  if (subset.size() != n) {
    throw ContractViolation("stabilizer_element: subset of length " + std::to_string(subset.size()) + " for " +
                            std::to_string(n) + " qubits");
  }
  PauliOperator acc = PauliOperator::identity(n);
  for (auto i : subset.indices()) {
    Bitvec x(n);
    x.set(i);
    acc = pauli_multiply(acc, PauliOperator(x, g.neighbor_set(static_cast<int>(i)), 0));
  }
  return acc;
}

/// Lazily yields all 2^n stabilizing operators in ascending subset order.
class StabilizerRange {
 public:
  explicit StabilizerRange(const Graph& g) : graph_(g) {}

  struct Entry {
    Bitvec subset;
    PauliOperator op;
  };

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Entry;
    using difference_type = std::ptrdiff_t;
    using pointer = const Entry*;
    using reference = const Entry&;

    iterator() = default;
    iterator(const Graph* g, std::uint64_t index) : graph_(g), index_(index) { load(); }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      ++index_;
      load();
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    void load() {
      const auto n = static_cast<std::size_t>(graph_->size());
      if (index_ < (std::uint64_t{1} << n)) {
        Bitvec subset(n, index_);
        current_ = {subset, stabilizer_element(*graph_, subset)};
      }
    }

    const Graph* graph_ = nullptr;
    std::uint64_t index_ = 0;
    Entry current_;
  };

  iterator begin() const { return iterator(&graph_, 0); }
  iterator end() const { return iterator(&graph_, std::uint64_t{1} << graph_.size()); }
  std::uint64_t size() const { return std::uint64_t{1} << graph_.size(); }

 private:
  Graph graph_;
};

inline StabilizerRange full_stabilizer(const Graph& g) { return StabilizerRange(g); }

/// Dense amplitudes of a graph state. Basis index bit q is qubit q+1.
class StateVector {
 public:
  static constexpr int kMaxQubits = 12;

  StateVector(int n, std::vector<std::complex<double>> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (std::size_t{1} << n_)) throw ContractViolation("StateVector: dimension mismatch");
  }

  int num_qubits() const noexcept { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amplitudes_; }

  double norm() const {
    double s = 0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  int n_;
  std::vector<std::complex<double>> amplitudes_;
};

/// |G> = prod_{edges} CZ |+>^n, i.e. amplitude 2^{-n/2} (-1)^{edges inside b}.
inline StateVector statevector(const Graph& g) {
  const int n = g.size();
  if (n > StateVector::kMaxQubits) {
    throw ResourceError("statevector: " + std::to_string(n) + " qubits exceeds the 12-qubit memory guard");
  }
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  const auto edge_list = g.edges();
  std::vector<std::complex<double>> amps(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    int parity = 0;
    for (auto [u, v] : edge_list) parity ^= int((b >> u) & (b >> v) & 1u);
    amps[b] = parity ? -amp : amp;
  }
  return StateVector(n, std::move(amps));
}

/// <sv| p |sv>, applying p to each basis state.
inline double expectation(const StateVector& sv, const PauliOperator& p) {
  if (p.num_qubits() != static_cast<std::size_t>(sv.num_qubits())) {
    throw ContractViolation("expectation: operator on " + std::to_string(p.num_qubits()) + " qubits, state on " +
                            std::to_string(sv.num_qubits()));
  }
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t xs = p.x().word();
  const std::uint64_t zs = p.z().word();
  // P_q = i^{x z} X^x Z^z per qubit, so the whole string is i^{phase + #Y} X^xs Z^zs.
  const auto coeff = kIPow[(p.phase() + std::popcount(xs & zs)) % 4];
  const auto& a = sv.amplitudes();
  std::complex<double> total = 0;
  for (std::size_t b = 0; b < a.size(); ++b) {
    const double zsign = (std::popcount(b & zs) & 1) ? -1.0 : 1.0;
    total += std::conj(a[b ^ xs]) * coeff * zsign * a[b];
  }
  return total.real();
}

}  // namespace avn
