#include "avn/gf2.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace avn;

TEST(Bitvec, basic_ops) {
  auto v = Bitvec::from_indices(5, {0, 3});
  EXPECT_EQ(v.to_string(), "10010");
  EXPECT_EQ(v.popcount(), 2);
  EXPECT_TRUE(v.test(3));
  v.flip(3).set(4);
  EXPECT_EQ(v.indices(), (std::vector<std::size_t>{0, 4}));
  EXPECT_TRUE(v.parity(Bitvec::from_indices(5, {0, 1})));
  EXPECT_FALSE(v.parity(Bitvec::from_indices(5, {0, 4})));
}

TEST(Bitvec, length_mismatch_is_contract_violation) {
  Bitvec a(4), b(5);
  EXPECT_THROW(a ^= b, ContractViolation);
  EXPECT_THROW((void)a.parity(b), ContractViolation);
  EXPECT_THROW(a.set(4), ContractViolation);
  EXPECT_THROW(Bitvec(65), ContractViolation);
  EXPECT_THROW(Bitvec(3, 0b1000), ContractViolation);
}

TEST(Gf2Solve, single_equation) {
  Gf2System sys(1);
  sys.fix(0, true);
  auto x = gf2_solve(sys);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->word(), 1u);
}

TEST(Gf2Solve, inconsistent_pair) {
  Gf2System sys(1);
  sys.fix(0, false).fix(0, true);
  EXPECT_FALSE(gf2_solve(sys));
  auto r = gf2_analyze(sys);
  EXPECT_EQ(r.conflict, (std::vector<std::size_t>{0, 1}));
}

TEST(Gf2Solve, row_length_mismatch) {
  Gf2System sys(3);
  EXPECT_THROW(sys.add_row(Bitvec(2), true), ContractViolation);
}

TEST(Gf2Solve, free_variables_are_zero_and_pivots_lowest) {
  // x0 + x1 = 1 ; x2 free
  Gf2System sys(3);
  sys.add_row(Bitvec::from_indices(3, {0, 1}), true);
  auto x = gf2_solve(sys);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->to_string(), "100");
}

TEST(Gf2Solve, planted_full_rank_5x5) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Bitvec planted(5, rng() & 31u);
    Gf2System sys(5);
    std::vector<Bitvec> rows;
    // draw until full rank
    while (true) {
      rows.clear();
      for (int r = 0; r < 5; ++r) rows.emplace_back(5, rng() & 31u);
      int rank = 0;
      std::vector<std::uint64_t> basis;
      for (auto& row : rows) {
        std::uint64_t w = row.word();
        for (auto b : basis) w = std::min(w, w ^ b);
        if (w) {
          basis.push_back(w);
          ++rank;
        }
      }
      if (rank == 5) break;
    }
    for (auto& row : rows) sys.add_row(row, row.parity(planted));
    auto x = gf2_solve(sys);
    ASSERT_TRUE(x);
    for (const auto& r : sys.rows()) EXPECT_EQ(r.coeffs.parity(*x), r.rhs);
    EXPECT_EQ(*x, planted);  // full rank: unique
  }
}

TEST(Gf2Solve, solutions_satisfy_rows_and_inconsistency_is_monotone) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t vars = 1 + rng() % 8;
    Gf2System sys(vars);
    const int rows = 1 + static_cast<int>(rng() % 10);
    for (int r = 0; r < rows; ++r) sys.add_row(Bitvec(vars, rng() & ((1u << vars) - 1)), rng() & 1u);
    auto res = gf2_analyze(sys);
    // brute force
    bool any = false;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars); ++a) any = any || sys.satisfied_by(Bitvec(vars, a));
    EXPECT_EQ(res.consistent(), any);
    if (res.consistent()) {
      EXPECT_TRUE(sys.satisfied_by(*res.solution));
    } else {
      // certificate: listed rows sum to 0 = 1
      std::uint64_t acc = 0;
      bool rhs = false;
      for (auto k : res.conflict) {
        acc ^= sys.rows()[k].coeffs.word();
        rhs ^= sys.rows()[k].rhs;
      }
      EXPECT_EQ(acc, 0u);
      EXPECT_TRUE(rhs);
      auto more = sys;
      for (int extra = 0; extra < 3; ++extra) more.add_row(Bitvec(vars, rng() & ((1u << vars) - 1)), rng() & 1u);
      EXPECT_FALSE(gf2_solve(more));
    }
    EXPECT_EQ(gf2_solve(sys), gf2_solve(sys));
  }
}
