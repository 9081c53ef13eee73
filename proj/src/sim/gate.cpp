// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qpca/errors.hpp"

namespace qpca::sim {

double unitarity_error(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

GateOp GateOp::dense(Eigen::MatrixXcd matrix, std::vector<unsigned> targets,
                     std::vector<Control> controls, std::string label) {
  GateOp op;
  op.kind_ = Kind::Dense;
  op.targets_ = std::move(targets);
  op.controls_ = std::move(controls);
  op.label_ = std::move(label);
  op.validate_wiring();
  auto dim = static_cast<Eigen::Index>(op.dimension());
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw InvalidArgument("gate matrix is " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + " but acts on " +
                          std::to_string(op.targets_.size()) + " qubit(s)");
  }
  if (!matrix.allFinite()) throw InvalidArgument("gate matrix has non-finite entries");
  double err = unitarity_error(matrix);
  if (!(err < kUnitarityTolerance)) {
    throw InvalidArgument("gate matrix is not unitary (max |M^H M - I| = " + std::to_string(err) +
                          ")");
  }
  op.matrix_ = std::move(matrix);
  return op;
}

GateOp GateOp::permutation(std::vector<std::uint64_t> image, std::vector<unsigned> targets,
                           std::vector<Control> controls, std::string label) {
  GateOp op;
  op.kind_ = Kind::Permutation;
  op.targets_ = std::move(targets);
  op.controls_ = std::move(controls);
  op.label_ = std::move(label);
  op.validate_wiring();
  if (image.size() != op.dimension()) {
    throw InvalidArgument("permutation has " + std::to_string(image.size()) +
                          " entries, expected " + std::to_string(op.dimension()));
  }
  std::vector<bool> hit(image.size(), false);
  for (auto r : image) {
    if (r >= image.size() || hit[r]) throw InvalidArgument("permutation image is not a bijection");
    hit[r] = true;
  }
  op.image_ = std::move(image);
  return op;
}

void GateOp::validate_wiring() const {
  if (targets_.empty()) throw InvalidArgument("gate has no target qubits");
  if (targets_.size() > 16) throw InvalidArgument("gate acts on more than 16 qubits");
  std::set<unsigned> seen;
  for (auto t : targets_) {
    if (!seen.insert(t).second) throw InvalidArgument("duplicate qubit " + std::to_string(t));
  }
  for (const auto& c : controls_) {
    if (!seen.insert(c.qubit).second) {
      throw InvalidArgument("control qubit " + std::to_string(c.qubit) +
                            " repeats a target or control");
    }
  }
}

unsigned GateOp::max_qubit() const noexcept {
  unsigned m = *std::max_element(targets_.begin(), targets_.end());
  for (const auto& c : controls_) m = std::max(m, c.qubit);
  return m;
}

Eigen::MatrixXcd GateOp::to_matrix() const {
  if (kind_ == Kind::Dense) return matrix_;
  auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) m(static_cast<Eigen::Index>(image_[c]), c) = 1.0;
  return m;
}

GateOp GateOp::adjoint() const {
  GateOp op = *this;
  if (kind_ == Kind::Dense) {
    op.matrix_ = matrix_.adjoint();
  } else {
    for (std::size_t c = 0; c < image_.size(); ++c) op.image_[image_[c]] = c;
  }
  return op;
}

GateOp GateOp::with_label(std::string label) const {
  GateOp op = *this;
  op.label_ = std::move(label);
  return op;
}

GateOp GateOp::with_controls(std::vector<Control> extra) const {
  GateOp op = *this;
  op.controls_.insert(op.controls_.end(), extra.begin(), extra.end());
  op.validate_wiring();
  return op;
}

GateOp GateOp::remapped(const std::vector<unsigned>& map) const {
  GateOp op = *this;
  auto at = [&](unsigned q) {
    if (q >= map.size()) throw InvalidArgument("qubit " + std::to_string(q) + " has no mapping");
    return map[q];
  };
  for (auto& t : op.targets_) t = at(t);
  for (auto& c : op.controls_) c.qubit = at(c.qubit);
  op.validate_wiring();
  return op;
}

namespace gates {

GateOp h(unsigned q) {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::MatrixXcd m(2, 2);
  m << s, s, s, -s;
  return GateOp::dense(std::move(m), {q}, {}, "h");
}

GateOp x(unsigned q) { return GateOp::permutation({1, 0}, {q}, {}, "x"); }

GateOp ry(double theta, unsigned q) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::MatrixXcd m(2, 2);
  m << c, -s, s, c;
  return GateOp::dense(std::move(m), {q}, {}, "ry");
}

GateOp phase(double phi, unsigned q) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(1, 1) = std::polar(1.0, phi);
  return GateOp::dense(std::move(m), {q}, {}, "p");
}

GateOp swap(unsigned a, unsigned b) { return GateOp::permutation({0, 2, 1, 3}, {a, b}, {}, "swap"); }

}  // namespace gates
}  // namespace qpca::sim
