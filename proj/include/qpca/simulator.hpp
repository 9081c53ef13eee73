// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>

#include "qpca/circuit.hpp"
#include "qpca/state_vector.hpp"

namespace qpca::sim {

/// U|psi> with controls honored. Throws InvalidArgument if the op reaches
/// past the state's qubits.
StateVector apply(StateVector state, const GateOp& op);

/// Applies every op in order. Throws DimensionMismatch on width mismatch and
/// InvariantViolation if the norm drifts beyond kNormTolerance.
StateVector run(StateVector state, const Circuit& circuit);

struct PostSelection {
  double probability;
  StateVector state;
};

/// Probability that `qubit` reads `outcome`.
double outcome_probability(const StateVector& state, unsigned qubit, int outcome);

/// Projects `qubit` onto `outcome` and renormalizes. Throws
/// ZeroProbabilityOutcome when the outcome has probability < 1e-12.
PostSelection post_select(const StateVector& state, unsigned qubit, int outcome);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Multinomial draw of `shots` basis-state outcomes from |amps|^2, seeded with
/// mt19937_64(seed).
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Full 2^Q x 2^Q matrix of a circuit, column j = run(|j>). Q <= 12.
Eigen::MatrixXcd unitary_of(const Circuit& circuit);

/// Engine is the only code allowed to write StateVector amplitudes in place.
class Engine {
 public:
  static void apply_in_place(StateVector& state, const GateOp& op);
};

}  // namespace qpca::sim
