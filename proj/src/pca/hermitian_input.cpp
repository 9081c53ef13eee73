// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/hermitian_input.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "qpca/errors.hpp"

namespace qpca::pca {

HermitianInput HermitianInput::from_matrix(Eigen::MatrixXd matrix, double symmetry_tolerance) {
  if (matrix.rows() != matrix.cols()) {
    throw NotSquare("matrix is " + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()) + ", expected square");
  }
  if (matrix.rows() == 0) throw InvalidArgument("matrix is empty");
  if (!matrix.allFinite()) throw InvalidArgument("matrix has non-finite entries");
  Eigen::Index worst_r = 0, worst_c = 0;
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff(&worst_r, &worst_c);
  if (asym > symmetry_tolerance) {
    throw NotSymmetric("entries (" + std::to_string(worst_r + 1) + "," + std::to_string(worst_c + 1) +
                       ") and (" + std::to_string(worst_c + 1) + "," + std::to_string(worst_r + 1) +
                       ") differ by " + std::to_string(asym));
  }

  HermitianInput in;
  in.matrix_ = std::move(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(in.matrix_);
  if (solver.info() != Eigen::Success) throw InvalidArgument("eigendecomposition failed");

  const Eigen::Index d = in.matrix_.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });
  in.eigenvalues_.resize(d);
  in.eigenvectors_.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    in.eigenvalues_(k) = solver.eigenvalues()(order[static_cast<std::size_t>(k)]);
    in.eigenvectors_.col(k) = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
  }

  const double top = in.eigenvalues_.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < d; ++k) {
    if (std::abs(in.eigenvalues_(k)) > 1e-9 * top) ++in.rank_;
  }
  return in;
}

std::vector<double> HermitianInput::encoded_state() const {
  const double frob = matrix_.norm();
  if (frob == 0.0) throw InvalidArgument("the zero matrix has no amplitude encoding");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(matrix_.size()));
  for (Eigen::Index r = 0; r < matrix_.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix_.cols(); ++c) out.push_back(matrix_(r, c) / frob);
  }
  return out;
}

}  // namespace qpca::pca
