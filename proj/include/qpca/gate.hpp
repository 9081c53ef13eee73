// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qpca::sim {

struct Control {
  unsigned qubit = 0;
  /// true: active when the qubit is |1>, false: active on |0>.
  bool on_one = true;

  bool operator==(const Control&) const = default;
};

inline constexpr double kUnitarityTolerance = 1e-10;

/// A unitary acting on `targets`, conditioned on `controls`.
///
/// targets[0] is the most significant bit of the local matrix index, matching
/// the global qubit ordering. The operator is stored either as a dense
/// 2^k x 2^k matrix or, for classical reversible maps, as the permutation
/// image[c] = r meaning U|c> = |r>. Unitarity is checked once here so the
/// kernels never have to.
class GateOp {
 public:
  enum class Kind { Dense, Permutation };

  static GateOp dense(Eigen::MatrixXcd matrix, std::vector<unsigned> targets,
                      std::vector<Control> controls = {}, std::string label = {});
  static GateOp permutation(std::vector<std::uint64_t> image, std::vector<unsigned> targets,
                            std::vector<Control> controls = {}, std::string label = {});

  Kind kind() const noexcept { return kind_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  const std::vector<std::uint64_t>& image() const noexcept { return image_; }
  const std::vector<unsigned>& targets() const noexcept { return targets_; }
  const std::vector<Control>& controls() const noexcept { return controls_; }
  const std::string& label() const noexcept { return label_; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << targets_.size(); }

  /// Largest qubit index touched, targets and controls included.
  unsigned max_qubit() const noexcept;
  /// Dense form of the target-space operator (controls not included).
  Eigen::MatrixXcd to_matrix() const;

  GateOp adjoint() const;
  GateOp with_label(std::string label) const;
  GateOp with_controls(std::vector<Control> extra) const;
  /// Renames qubit q to map[q].
  GateOp remapped(const std::vector<unsigned>& map) const;

 private:
  GateOp() = default;
  void validate_wiring() const;

  Kind kind_ = Kind::Dense;
  Eigen::MatrixXcd matrix_;
  std::vector<std::uint64_t> image_;
  std::vector<unsigned> targets_;
  std::vector<Control> controls_;
  std::string label_;
};

/// max |(M^dagger M - I)_ij|
double unitarity_error(const Eigen::MatrixXcd& m);

namespace gates {

GateOp h(unsigned q);
GateOp x(unsigned q);
/// [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
GateOp ry(double theta, unsigned q);
/// diag(1, e^{i phi})
GateOp phase(double phi, unsigned q);
GateOp swap(unsigned a, unsigned b);

}  // namespace gates
}  // namespace qpca::sim
