// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpca/gate.hpp"

namespace qpca::sim {

/// Ordered list of gate operations over a fixed number of qubits.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  /// Throws InvalidArgument if the op touches a qubit >= num_qubits().
  Circuit& append(GateOp op);
  /// Concatenation; both circuits must have the same width.
  Circuit& append(const Circuit& other);

  /// Reversed order, every op replaced by its adjoint.
  Circuit inverse() const;
  /// Places this circuit into a `num_qubits`-wide circuit, qubit q -> map[q].
  Circuit remapped(const std::vector<unsigned>& map, unsigned num_qubits) const;
  /// Shorthand for remapping onto the contiguous block starting at `offset`.
  Circuit embedded(unsigned offset, unsigned num_qubits) const;
  /// Every op gets the given label.
  Circuit relabeled(const std::string& label) const;

  std::map<std::string, std::size_t> label_counts() const;

 private:
  unsigned num_qubits_;
  std::vector<GateOp> ops_;
};

}  // namespace qpca::sim
