// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "qpca/gate.hpp"
#include "qpca/state_vector.hpp"

namespace qpca::sim {

// In-place gate application on a raw amplitude buffer of length 2^num_qubits.
// Neither function checks qubit ranges; callers do (see simulator.hpp).

/// Out-of-place, one basis index at a time. Reference for the parallel path.
void apply_serial(std::span<Complex> amps, unsigned num_qubits, const GateOp& op);

/// Blocked over the free (non-target, non-control) index bits; OpenMP when
/// built with it. Produces bit-identical results to apply_serial.
void apply_parallel(std::span<Complex> amps, unsigned num_qubits, const GateOp& op);

/// Number of OpenMP threads the parallel kernel will use (1 without OpenMP).
int kernel_threads();

}  // namespace qpca::sim
