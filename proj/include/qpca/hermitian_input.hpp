// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qpca::pca {

/// Validated real symmetric matrix with its eigendecomposition.
/// Eigenvalues are sorted descending; eigenvectors() column k pairs with
/// eigenvalues()(k). For symmetric input u_k = v_k and sigma_k = |lambda_k|.
class HermitianInput {
 public:
  /// Throws NotSquare, or NotSymmetric when max |A - A^T| > tolerance.
  static HermitianInput from_matrix(Eigen::MatrixXd matrix, double symmetry_tolerance = 1e-9);

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>(matrix_.rows()); }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }
  Eigen::VectorXd singular_values() const { return eigenvalues_.cwiseAbs(); }
  /// Eigenvalues with |lambda| above 1e-9 times the largest magnitude.
  unsigned rank() const noexcept { return rank_; }

  /// Row-major flattening divided by the Frobenius norm: the amplitude
  /// encoding sum_k sigma_k |u_k>|v_k>.
  std::vector<double> encoded_state() const;

 private:
  HermitianInput() = default;

  Eigen::MatrixXd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  unsigned rank_ = 0;
};

}  // namespace qpca::pca
