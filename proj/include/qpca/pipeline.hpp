// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpca/builders.hpp"
#include "qpca/eigen_filter.hpp"
#include "qpca/hermitian_input.hpp"
#include "qpca/register_layout.hpp"
#include "qpca/simulator.hpp"

namespace qpca::pca {

struct OracleResult {
  unsigned kept = 0;                  // t
  std::vector<double> kept_eigenvalues;  // descending
  std::vector<double> expected_state;    // data-register amplitudes
};

/// Dense-eigendecomposition reference: sum_{lambda_k > tau} lambda_k u_k (x) u_k,
/// normalized. Throws AllComponentsFiltered if no eigenvalue exceeds tau.
OracleResult classical_pca_oracle(const HermitianInput& input, double tau);

enum class Mode { Exact, Sampled };

/// Which y computation the filter uses.
enum class FilterArithmetic {
  FixedPointNewton,  // the circuit's arithmetic
  RealShrink,        // real-valued reference thresholding
};

struct QpcaConfig {
  double tau = 1.0;
  unsigned n_bits = 2;
  Mode mode = Mode::Exact;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  FilterArithmetic arithmetic = FilterArithmetic::FixedPointNewton;
};

struct QpcaResult {
  RegisterLayout layout{1, 1, 1};
  std::vector<double> input_state;

  double success_prob = 0.0;
  /// Post-selected data register. Signed amplitudes in exact mode,
  /// sqrt(count / accepted) magnitudes in sampled mode.
  std::vector<double> output_amps;
  unsigned kept_count = 0;
  std::vector<double> kept_eigenvalues;
  std::map<std::uint64_t, double> lambda_histogram;
  double fidelity = 0.0;
  std::vector<double> expected_state;

  /// Probability outside y = lambda = 0 after uncompute, before measurement.
  double uncompute_residual = 0.0;
  /// Largest |imag| among output amplitudes (exact mode).
  double max_imag = 0.0;

  std::int64_t total_gates = 0;
  std::map<std::string, std::size_t> simulated_ops;

  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> accepted_shots;
  sim::Histogram data_counts;

  sim::StateVector pre_measurement = sim::StateVector::zero(1);
  sim::StateVector post_selected = sim::StateVector::zero(1);
  sim::StateVector joint_state = sim::StateVector::zero(1);

  std::vector<std::string> warnings;
};

/// X on the ancilla when any y-register qubit is 1.
sim::Circuit build_controlled_flip(const RegisterLayout& layout);
sim::StateVector controlled_flip(sim::StateVector state, const RegisterLayout& layout);

/// Inverse filter, then inverse phase estimation.
sim::StateVector uncompute(sim::StateVector state, const RegisterLayout& layout,
                           const sim::GateOp& filter, const sim::Circuit& pe);

sim::StateVector second_phase_estimation(sim::StateVector state,
                                         const build::PhaseEstimationSpec& spec,
                                         const RegisterLayout& layout);

/// Marginal distribution of the lambda register (entries above 1e-12).
std::map<std::uint64_t, double> lambda_histogram(const sim::StateVector& state,
                                                 const RegisterLayout& layout);

/// Total probability on basis states with a nonzero y or lambda register.
double register_residual(const sim::StateVector& state, const RegisterLayout& layout);

/// Data-register amplitudes on the branch ancilla = `ancilla`, y = lambda = 0.
std::vector<sim::Complex> data_amplitudes(const sim::StateVector& state,
                                          const RegisterLayout& layout, int ancilla);

/// Full low-complexity qPCA: state prep, phase estimation, eigenvalue filter,
/// controlled ancilla flip, uncompute, post-selection on ancilla = 1, second
/// phase estimation. Throws ZeroProbabilityOutcome when nothing survives,
/// InvariantViolation when the work registers fail to clean up.
QpcaResult run_qpca(const HermitianInput& input, const QpcaConfig& config);

}  // namespace qpca::pca
