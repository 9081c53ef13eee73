// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/complexity.hpp"

#include "qpca/errors.hpp"

namespace qpca::cost {

namespace {

CostReport finish(unsigned n, unsigned m, std::vector<std::pair<std::string, std::int64_t>> blocks) {
  CostReport r;
  r.n = n;
  r.per_block = std::move(blocks);
  for (const auto& [name, count] : r.per_block) r.total += count;
  r.qubits = 1 + 2 * static_cast<std::int64_t>(n) + m;
  return r;
}

void check(unsigned n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
}

}  // namespace

CostReport cost_proposed(unsigned n, unsigned m) {
  check(n);
  const std::int64_t k = n;
  return finish(n, m,
                {{"PE1", k * k},
                 {"U_lambda_tau", 16 * k},
                 {"CU", k},
                 {"U_dagger", k * k + 16 * k},
                 {"PE2", k * k}});
}

CostReport cost_baseline(unsigned n, unsigned m) {
  check(n);
  const std::int64_t k = n;
  return finish(n, m,
                {{"PE_x3", 3 * k * k},
                 {"U_sigma_tau", 24 * k},
                 {"U'_sigma_tau", 24 * k},
                 {"Ry_alpha_x2", 2 * k},
                 {"U_dagger_x2", 2 * k * k + 48 * k}});
}

double gate_ratio(unsigned n) {
  return static_cast<double>(cost_proposed(n, 0).total) / static_cast<double>(cost_baseline(n, 0).total);
}

}  // namespace qpca::cost
