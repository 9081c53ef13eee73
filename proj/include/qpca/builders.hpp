// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qpca/circuit.hpp"
#include "qpca/register_layout.hpp"

namespace qpca::build {

/// n-qubit QFT: |j> -> 2^{-n/2} sum_k e^{2 pi i jk / 2^n} |k>, qubit 0 as MSB.
sim::Circuit build_qft(unsigned n);
sim::Circuit build_inverse_qft(unsigned n);

/// Real symmetric matrix plus eigenvalue register width. The phase register
/// stores lambda / 2^n, so integer eigenvalues in [0, 2^n) read out exactly.
class PhaseEstimationSpec {
 public:
  /// Throws NotSquare / NotSymmetric (tolerance 1e-10) / InvalidArgument.
  PhaseEstimationSpec(Eigen::MatrixXd matrix, unsigned eig_bits);

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  unsigned eig_bits() const noexcept { return eig_bits_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>(matrix_.rows()); }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }

  /// All eigenvalues are integers (within 1e-9) in [0, 2^n). Outside exact
  /// mode phase estimation still runs but spreads amplitude over neighbours.
  bool exact_spectrum() const noexcept { return exact_; }

 private:
  Eigen::MatrixXd matrix_;
  unsigned eig_bits_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  bool exact_ = false;
};

/// exp(2 pi i A 2^power / 2^n) from the eigendecomposition.
Eigen::MatrixXcd matrix_exponential(const PhaseEstimationSpec& spec, unsigned power);

/// Same operator as a gate on qubits [0, log2 d). Requires power < n and a
/// power-of-two dimension.
sim::GateOp matrix_exponential_unitary(const PhaseEstimationSpec& spec, unsigned power);

/// H on the lambda register, controlled-U^{2^j} ladder on the row qubits, then
/// the inverse QFT. Output width is layout.total_qubits().
sim::Circuit build_phase_estimation(const PhaseEstimationSpec& spec, const RegisterLayout& layout);

/// Binary tree of Ry angles: level l has 2^l angles, one per prefix of l bits.
struct StatePrepTree {
  std::vector<double> leaf_values;               // normalized target
  std::vector<std::vector<double>> node_angles;  // [level][prefix]
};

StatePrepTree make_state_prep_tree(std::span<const double> vector);

/// Uniformly-controlled Ry layers preparing the normalized `vector` from
/// |0...0> on m qubits. Negative leaves are reached by rotating past pi/2 at
/// the last level. Throws InvalidArgument for the zero vector or a length
/// other than 2^m.
sim::Circuit build_state_prep(std::span<const double> vector, unsigned m);

}  // namespace qpca::build
