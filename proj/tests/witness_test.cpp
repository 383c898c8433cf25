#include "avn/witness.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace avn;

namespace {

Bitvec subset(int n, std::initializer_list<std::size_t> one_based) {
  Bitvec b(static_cast<std::size_t>(n));
  for (auto q : one_based) b.set(q - 1);
  return b;
}

AvnWitness fc4_witness() { return {{subset(4, {1}), subset(4, {2}), subset(4, {3}), subset(4, {1, 2, 3})}}; }

// Y1 Y2 Z3 = Z1 X2 Z3 = Z1 Y2 Y3 Z4 = -Y1 X2 Y3 Z4
AvnWitness lc4_witness() { return {{subset(4, {1, 2}), subset(4, {2}), subset(4, {2, 3}), subset(4, {1, 2, 3})}}; }

std::vector<std::string> strings(const Graph& g, const AvnWitness& w) {
  std::vector<std::string> out;
  for (const auto& op : witness_operators(g, w)) out.push_back(op.to_string());
  return out;
}

}  // namespace

TEST(WitnessOperators, fc4_correlations) {
  EXPECT_EQ(strings(complete_graph(4), fc4_witness()),
            (std::vector<std::string>{"X1 Z2 Z3 Z4", "Z1 X2 Z3 Z4", "Z1 Z2 X3 Z4", "-X1 X2 X3 Z4"}));
}

TEST(WitnessOperators, lc4_correlations) {
  EXPECT_EQ(strings(path_graph(4), lc4_witness()),
            (std::vector<std::string>{"Y1 Y2 Z3", "Z1 X2 Z3", "Z1 Y2 Y3 Z4", "-Y1 X2 Y3 Z4"}));
}

TEST(WitnessOperators, lc4_last_correlation_needs_three_generators) {
  const Graph g = path_graph(4);
  const auto target = PauliOperator::parse(4, "-Y1 X2 Y3 Z4");
  std::vector<std::uint64_t> hits;
  for (const auto& [s, op] : full_stabilizer(g)) {
    if (op == target) hits.push_back(s.word());
  }
  EXPECT_EQ(hits, (std::vector<std::uint64_t>{0b0111}));
  EXPECT_EQ(stabilizer_element(g, subset(4, {1, 3})).to_string(), "X1 X3 Z4");
}

TEST(AssignmentConsistent, paper_sets_are_inconsistent) {
  EXPECT_FALSE(assignment_consistent(witness_operators(complete_graph(4), fc4_witness())).consistent);
  EXPECT_FALSE(assignment_consistent(witness_operators(path_graph(4), lc4_witness())).consistent);
}

TEST(AssignmentConsistent, certificate_rows_cover_every_operator) {
  const auto r = assignment_consistent(witness_operators(complete_graph(4), fc4_witness()));
  EXPECT_EQ(r.conflict, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_FALSE(r.model);
}

TEST(AssignmentConsistent, single_operator_is_consistent) {
  for (const auto& [s, op] : full_stabilizer(ring_graph(5))) {
    const auto r = assignment_consistent({op});
    ASSERT_TRUE(r.consistent);
    ASSERT_TRUE(r.model);
    int value = sign_of(op);
    for (std::size_t q = 0; q < 5; ++q) {
      const auto l = op.letter(q);
      if (l != PauliLetter::I && r.model->test(assignment_variable(q, l))) value = -value;
    }
    EXPECT_EQ(value, 1);
  }
}

TEST(AssignmentConsistent, mismatched_qubit_counts) {
  EXPECT_THROW(assignment_consistent({PauliOperator(2), PauliOperator(3)}), ContractViolation);
}

TEST(AssignmentConsistent, agrees_with_exhaustive_search) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Graph g = oracle::random_connected_graph(n, rng);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<PauliOperator> ops;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < k; ++t) ops.push_back(stabilizer_element(g, Bitvec(static_cast<std::size_t>(n), rng() % total)));
    EXPECT_EQ(assignment_consistent(ops).consistent, oracle::assignment_exists(ops));
  }
}

TEST(AssignmentConsistent, parity_sign_duality) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Graph g = oracle::random_connected_graph(n, rng);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<PauliOperator> ops;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < k; ++t) ops.push_back(stabilizer_element(g, Bitvec(static_cast<std::size_t>(n), rng() % total)));
    EXPECT_EQ(!assignment_consistent(ops).consistent, oracle::contradictory_subset_exists(ops));
  }
}

TEST(VerifyWitness, paper_witnesses) {
  EXPECT_TRUE(verify_witness(fc4_witness(), complete_graph(4)));
  EXPECT_TRUE(verify_witness(lc4_witness(), path_graph(4)));
}

TEST(VerifyWitness, dropping_an_operator_breaks_parity) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    auto w = fc4_witness();
    w.operators.erase(w.operators.begin() + static_cast<std::ptrdiff_t>(skip));
    EXPECT_FALSE(verify_witness(w, complete_graph(4)));
    EXPECT_FALSE(letter_parity_even(witness_operators(complete_graph(4), w)));
  }
}

TEST(VerifyWitness, rejects_malformed) {
  EXPECT_FALSE(verify_witness({}, complete_graph(4)));
  EXPECT_FALSE(verify_witness({{Bitvec(3)}}, complete_graph(4)));
  // even parity but sign product +1
  EXPECT_FALSE(verify_witness({{subset(4, {1}), subset(4, {1})}}, complete_graph(4)));
}

TEST(IsCritical, paper_witnesses) {
  EXPECT_TRUE(is_critical(fc4_witness(), complete_graph(4)));
  EXPECT_TRUE(is_critical(lc4_witness(), path_graph(4)));
}

TEST(IsCritical, padded_witness_is_not) {
  auto w = fc4_witness();
  w.operators.push_back(subset(4, {4}));
  w.operators.push_back(subset(4, {4}));
  EXPECT_TRUE(verify_witness(w, complete_graph(4)));
  EXPECT_FALSE(is_critical(w, complete_graph(4)));
}

TEST(FindWitness, fc3_singletons) {
  const Graph g = complete_graph(3);
  const auto w = find_witness(g, Distribution::singletons(3));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->operators.size(), 4u);
  EXPECT_EQ(sign_product(witness_operators(g, *w)), -1);
  EXPECT_EQ(strings(g, *w), (std::vector<std::string>{"X1 Z2 Z3", "Z1 X2 Z3", "Z1 Z2 X3", "-X1 X2 X3"}));
  EXPECT_TRUE(is_critical(*w, g));
}

TEST(FindWitness, lc4_two_pairs) {
  const Graph g = path_graph(4);
  const auto w = find_witness(g, Distribution::parse("1,4|2,3", 4));
  ASSERT_TRUE(w);
  EXPECT_LE(w->operators.size(), 4u);
  EXPECT_TRUE(verify_witness(*w, g));
}

TEST(FindWitness, single_edge_has_none) {
  EXPECT_FALSE(find_witness(path_graph(2), Distribution::singletons(2), {.max_size = 8}));
  EXPECT_FALSE(find_witness(path_graph(2), Distribution::singletons(2), {.max_size = 8, .exhaustive = true}));
  std::vector<PauliOperator> all;
  for (const auto& [s, op] : full_stabilizer(path_graph(2))) all.push_back(op);
  EXPECT_TRUE(oracle::assignment_exists(all));
}

TEST(FindWitness, guards) {
  EXPECT_THROW(find_witness(path_graph(4), Distribution::singletons(4), {.max_size = 1}), ContractViolation);
  EXPECT_THROW(find_witness(path_graph(4), Distribution::singletons(4), {.max_size = 9}), ContractViolation);
  EXPECT_THROW(find_witness(path_graph(9), Distribution::singletons(9)), ResourceError);
  EXPECT_THROW(find_witness(path_graph(6), Distribution::singletons(6), {.exhaustive = true}), ResourceError);
}

TEST(FindWitness, outputs_verify_and_are_perfect_correlations) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& c : classify_all(n)) {
      const Graph& g = c.representative;
      const auto sv = statevector(g);
      for (const auto& level : minimal_shapes(n)) {
        for (const auto& s : level.shapes) {
          for (const auto& d : enumerate_distributions(g, s, true)) {
            if (!allows_specific_avn(g, d).allows) continue;
            const auto w = find_witness(g, d);
            ASSERT_TRUE(w) << g.to_string() << " " << d.to_string();
            ASSERT_TRUE(verify_witness(*w, g));
            for (const auto& op : witness_operators(g, *w)) ASSERT_NEAR(expectation(sv, op), 1.0, 1e-10);
          }
        }
      }
    }
  }
}

TEST(FindWitness, restricted_pool_matches_exhaustive_size) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& c : classify_all(n)) {
      for (const auto& d : all_partitions(n)) {
        const auto a = find_witness(c.representative, d);
        const auto b = find_witness(c.representative, d, {.exhaustive = true});
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_EQ(a->operators.size(), b->operators.size());
        }
      }
    }
  }
}

TEST(VerifyWitness, soundness_against_exhaustive_assignments) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& c : classify_all(n)) {
      const auto w = find_witness(c.representative, Distribution::singletons(n));
      ASSERT_TRUE(w);
      EXPECT_FALSE(oracle::assignment_exists(witness_operators(c.representative, *w)));
    }
  }
}

TEST(UnderusedQubits, fc4_witness_uses_two_observables_except_on_4) {
  EXPECT_EQ(underused_qubits(fc4_witness(), complete_graph(4)), (std::vector<int>{3}));
}

TEST(FormatEquation, paper_style) {
  EXPECT_EQ(format_equation(PauliOperator::parse(4, "-X1 X2 X3 Z4")), "-X1 X2 X3 Z4 = 1");
}
