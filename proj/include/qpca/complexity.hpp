// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qpca::cost {

// Gate budgets use the unit-cost-per-qubit-per-block bookkeeping of the
// original analysis; no transpilation to a physical gate set.

struct CostReport {
  unsigned n = 0;
  std::vector<std::pair<std::string, std::int64_t>> per_block;
  std::int64_t total = 0;
  std::int64_t qubits = 0;
};

/// PE1 n^2, filter 16n, CU n, U-dagger n^2 + 16n, PE2 n^2: 3n^2 + 33n total.
CostReport cost_proposed(unsigned n, unsigned m);

/// Threshold-then-modified-threshold baseline: 5n^2 + 98n total.
CostReport cost_baseline(unsigned n, unsigned m);

/// cost_proposed(n).total / cost_baseline(n).total, below and tending to 3/5.
double gate_ratio(unsigned n);

}  // namespace qpca::cost
