// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/simulator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qpca/errors.hpp"
#include "qpca/kernels.hpp"

namespace qpca::sim {

void Engine::apply_in_place(StateVector& state, const GateOp& op) {
  if (op.max_qubit() >= state.num_qubits()) {
    throw InvalidArgument("gate '" + op.label() + "' touches qubit " +
                          std::to_string(op.max_qubit()) + " of a " +
                          std::to_string(state.num_qubits()) + "-qubit state");
  }
  apply_parallel(state.amps_, state.num_qubits(), op);
}

StateVector apply(StateVector state, const GateOp& op) {
  Engine::apply_in_place(state, op);
  return state;
}

StateVector run(StateVector state, const Circuit& circuit) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw DimensionMismatch("circuit has " + std::to_string(circuit.num_qubits()) +
                            " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const auto& op : circuit.ops()) Engine::apply_in_place(state, op);
  if (double n = state.norm(); std::abs(n - 1.0) > kNormTolerance) {
    throw InvariantViolation("norm drifted to " + std::to_string(n));
  }
  return state;
}

double outcome_probability(const StateVector& state, unsigned qubit, int outcome) {
  if (qubit >= state.num_qubits()) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range");
  }
  if (outcome != 0 && outcome != 1) throw InvalidArgument("outcome must be 0 or 1");
  const std::uint64_t bit = std::uint64_t{1} << (state.num_qubits() - 1 - qubit);
  const std::uint64_t want = outcome ? bit : 0;
  double p = 0.0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if ((i & bit) == want) p += state.probability(i);
  }
  return p;
}

PostSelection post_select(const StateVector& state, unsigned qubit, int outcome) {
  const double p = outcome_probability(state, qubit, outcome);
  if (p < 1e-12) {
    throw ZeroProbabilityOutcome("qubit " + std::to_string(qubit) + " has probability " +
                                 std::to_string(p) + " of reading " + std::to_string(outcome));
  }
  const std::uint64_t bit = std::uint64_t{1} << (state.num_qubits() - 1 - qubit);
  const std::uint64_t want = outcome ? bit : 0;
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & bit) != want) amps[i] = 0.0;
  }
  return {p, StateVector::normalized(std::move(amps))};
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("shots must be at least 1");
  std::vector<double> weights(state.dimension());
  for (std::uint64_t i = 0; i < weights.size(); ++i) weights[i] = state.probability(i);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> pick(weights.begin(), weights.end());
  Histogram h;
  for (std::uint64_t s = 0; s < shots; ++s) ++h[pick(rng)];
  return h;
}

Eigen::MatrixXcd unitary_of(const Circuit& circuit) {
  const unsigned q = circuit.num_qubits();
  if (q > 12) throw InvalidArgument("unitary_of is limited to 12 qubits");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << q);
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    auto out = run(StateVector::basis(q, static_cast<std::uint64_t>(col)), circuit);
    for (Eigen::Index row = 0; row < dim; ++row) u(row, col) = out[static_cast<std::uint64_t>(row)];
  }
  return u;
}

}  // namespace qpca::sim
