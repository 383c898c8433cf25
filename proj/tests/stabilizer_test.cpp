#include "avn/stabilizer.hpp"

#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace avn;

namespace {

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& g : oracle::connected_graphs_up_to_iso(n)) out.push_back(g);
  }
  for (int n = 6; n <= 8; ++n) {
    for (const auto& c : classify_all(n)) out.push_back(c.representative);
  }
  out.push_back(Graph::parse("4: 1-2, 3-4"));  // disconnected graphs are fine here
  return out;
}

}  // namespace

TEST(Generators, single_vertex) {
  const auto g = generators(Graph(1));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].to_string(), "X1");
}

TEST(Generators, fc4_first) { EXPECT_EQ(generators(complete_graph(4))[0].to_string(), "X1 Z2 Z3 Z4"); }

TEST(Generators, lc4_last) { EXPECT_EQ(generators(path_graph(4))[3].to_string(), "Z3 X4"); }

TEST(Generators, shape_of_every_generator) {
  for (const auto& g : small_graphs()) {
    const auto gens = generators(g);
    for (int i = 0; i < g.size(); ++i) {
      const auto& p = gens[static_cast<std::size_t>(i)];
      EXPECT_EQ(p.x().word(), std::uint64_t{1} << i);
      EXPECT_EQ(p.z().word(), g.neighbors(i));
      EXPECT_EQ(p.phase(), 0);
    }
  }
}

TEST(StabilizerElement, empty_subset_is_identity) {
  const auto p = stabilizer_element(path_graph(3), Bitvec(3));
  EXPECT_EQ(p, PauliOperator::identity(3));
  EXPECT_EQ(sign_of(p), 1);
}

TEST(StabilizerElement, fc4_123) {
  EXPECT_EQ(stabilizer_element(complete_graph(4), Bitvec::from_indices(4, {0, 1, 2})).to_string(), "-X1 X2 X3 Z4");
}

TEST(StabilizerElement, lc4_2) {
  EXPECT_EQ(stabilizer_element(path_graph(4), Bitvec::from_indices(4, {1})).to_string(), "Z1 X2 Z3");
}

TEST(StabilizerElement, subset_length_checked) {
  EXPECT_THROW(stabilizer_element(path_graph(4), Bitvec(3)), ContractViolation);
}

TEST(FullStabilizer, single_vertex) {
  std::vector<std::string> got;
  for (const auto& e : full_stabilizer(Graph(1))) got.push_back(e.op.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"I", "X1"}));
}

TEST(FullStabilizer, single_edge) {
  std::vector<std::string> got;
  for (const auto& e : full_stabilizer(path_graph(2))) got.push_back(e.op.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"I", "X1 Z2", "Z1 X2", "Y1 Y2"}));
}

TEST(FullStabilizer, fc4_contains_eq5d) {
  bool found = false;
  for (const auto& e : full_stabilizer(complete_graph(4))) found = found || e.op.to_string() == "-X1 X2 X3 Z4";
  EXPECT_TRUE(found);
}

TEST(FullStabilizer, ascending_and_injective) {
  for (const auto& g : small_graphs()) {
    std::uint64_t expect = 0;
    std::set<std::pair<std::uint64_t, std::uint64_t>> parts;
    for (const auto& e : full_stabilizer(g)) {
      EXPECT_EQ(e.subset.word(), expect++);
      parts.emplace(e.op.x().word(), e.op.z().word());
    }
    EXPECT_EQ(parts.size(), std::size_t{1} << g.size());
  }
}

TEST(FullStabilizer, closed_under_products) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs_up_to_iso(n)) {
      std::vector<PauliOperator> elems;
      for (const auto& e : full_stabilizer(g)) elems.push_back(e.op);
      for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
          ASSERT_EQ(pauli_multiply(elems[a], elems[b]), elems[a ^ b]) << g.to_string();
        }
      }
    }
  }
}

TEST(Statevector, single_qubit) {
  const auto sv = statevector(Graph(1));
  EXPECT_NEAR(sv.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(sv.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Statevector, single_edge) {
  const auto sv = statevector(path_graph(2));
  const double expect[4] = {0.5, 0.5, 0.5, -0.5};
  for (int b = 0; b < 4; ++b) {
    EXPECT_NEAR(sv.amplitudes()[static_cast<std::size_t>(b)].real(), expect[b], 1e-15);
    EXPECT_EQ(sv.amplitudes()[static_cast<std::size_t>(b)].imag(), 0.0);
  }
}

TEST(Statevector, memory_guard) { EXPECT_THROW(statevector(path_graph(13)), ResourceError); }

TEST(Statevector, unit_norm) {
  for (const auto& g : small_graphs()) EXPECT_NEAR(statevector(g).norm(), 1.0, 1e-12);
}

TEST(Expectation, identity_is_one) {
  EXPECT_NEAR(expectation(statevector(ring_graph(5)), PauliOperator::identity(5)), 1.0, 1e-12);
}

TEST(Expectation, fc4_correlation_and_its_negation) {
  const auto sv = statevector(complete_graph(4));
  EXPECT_NEAR(expectation(sv, PauliOperator::parse(4, "-X1 X2 X3 Z4")), 1.0, 1e-12);
  EXPECT_NEAR(expectation(sv, PauliOperator::parse(4, "X1 X2 X3 Z4")), -1.0, 1e-12);
}

TEST(Expectation, dimension_mismatch) {
  EXPECT_THROW(expectation(statevector(path_graph(3)), PauliOperator(4)), ContractViolation);
}

TEST(Expectation, lc4_all_elements_are_perfect_correlations) {
  const Graph g = path_graph(4);
  const auto sv = statevector(g);
  int count = 0;
  for (const auto& e : full_stabilizer(g)) {
    EXPECT_NEAR(expectation(sv, e.op), 1.0, 1e-10);
    ++count;
  }
  EXPECT_EQ(count, 16);
}

TEST(Expectation, generators_and_every_element_stabilize) {
  for (const auto& g : small_graphs()) {
    const auto sv = statevector(g);
    for (const auto& p : generators(g)) EXPECT_NEAR(expectation(sv, p), 1.0, 1e-10);
    for (const auto& e : full_stabilizer(g)) {
      ASSERT_NEAR(expectation(sv, e.op), 1.0, 1e-10) << g.to_string() << " " << e.op.to_string();
      ASSERT_NEAR(expectation(sv, e.op.negated()), -1.0, 1e-10);
    }
  }
}

TEST(Expectation, non_stabilizer_paulis_vanish) {
  // A Pauli outside the stabilizer group (up to sign) has expectation 0.
  const Graph g = path_graph(3);
  const auto sv = statevector(g);
  EXPECT_NEAR(expectation(sv, PauliOperator::parse(3, "Z1")), 0.0, 1e-12);
  EXPECT_NEAR(expectation(sv, PauliOperator::parse(3, "X1 X2")), 0.0, 1e-12);
}
