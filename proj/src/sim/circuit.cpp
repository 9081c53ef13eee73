// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/circuit.hpp"

#include <numeric>

#include "qpca/errors.hpp"

namespace qpca::sim {

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {}

Circuit& Circuit::append(GateOp op) {
  if (op.max_qubit() >= num_qubits_) {
    throw InvalidArgument("gate '" + op.label() + "' touches qubit " +
                          std::to_string(op.max_qubit()) + " in a " +
                          std::to_string(num_qubits_) + "-qubit circuit");
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionMismatch("cannot append a " + std::to_string(other.num_qubits_) +
                            "-qubit circuit to a " + std::to_string(num_qubits_) +
                            "-qubit circuit");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits_);
  inv.ops_.reserve(ops_.size());
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) inv.ops_.push_back(it->adjoint());
  return inv;
}

Circuit Circuit::remapped(const std::vector<unsigned>& map, unsigned num_qubits) const {
  if (map.size() < num_qubits_) {
    throw InvalidArgument("qubit map covers " + std::to_string(map.size()) + " of " +
                          std::to_string(num_qubits_) + " qubits");
  }
  Circuit out(num_qubits);
  for (const auto& op : ops_) out.append(op.remapped(map));
  return out;
}

Circuit Circuit::embedded(unsigned offset, unsigned num_qubits) const {
  std::vector<unsigned> map(num_qubits_);
  std::iota(map.begin(), map.end(), offset);
  return remapped(map, num_qubits);
}

Circuit Circuit::relabeled(const std::string& label) const {
  Circuit out(num_qubits_);
  for (const auto& op : ops_) out.ops_.push_back(op.with_label(label));
  return out;
}

std::map<std::string, std::size_t> Circuit::label_counts() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& op : ops_) ++counts[op.label()];
  return counts;
}

}  // namespace qpca::sim
