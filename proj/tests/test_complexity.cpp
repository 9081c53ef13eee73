// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "qpca/complexity.hpp"

using namespace qpca::cost;

TEST(Complexity, SmallExamples) {
  EXPECT_EQ(cost_proposed(2, 2).total, 78);
  EXPECT_EQ(cost_baseline(2, 2).total, 216);
  EXPECT_NEAR(gate_ratio(2), 0.3611, 5e-5);
  EXPECT_EQ(cost_proposed(1, 2).total, 36);
  EXPECT_EQ(cost_baseline(1, 2).total, 103);
  EXPECT_EQ(cost_proposed(2, 2).qubits, 7);
}

TEST(Complexity, BlocksSumToTotal) {
  for (unsigned n : {1u, 2u, 7u, 100u}) {
    for (const auto& r : {cost_proposed(n, 2), cost_baseline(n, 2)}) {
      std::int64_t sum = 0;
      for (const auto& [name, c] : r.per_block) sum += c;
      EXPECT_EQ(sum, r.total);
    }
    EXPECT_EQ(cost_proposed(n, 2).per_block.size(), 5u);
  }
}

TEST(Complexity, ClosedForms) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const auto u = static_cast<unsigned>(n);
    ASSERT_EQ(cost_proposed(u, 2).total, 3 * n * n + 33 * n);
    ASSERT_EQ(cost_baseline(u, 2).total, 5 * n * n + 98 * n);
  }
}

TEST(Complexity, RatioBelowAndApproachingThreeFifths) {
  double prev = 0.0;
  for (unsigned n = 1; n <= 10000; ++n) {
    const double r = gate_ratio(n);
    ASSERT_LT(r, 0.6);
    ASSERT_GT(r, prev);
    prev = r;
  }
  EXPECT_NEAR(gate_ratio(1000), 0.6, 0.01);
}

TEST(Complexity, RejectsZeroBits) {
  EXPECT_ANY_THROW(cost_proposed(0, 2));
  EXPECT_ANY_THROW(gate_ratio(0));
}
