// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace qpca {

/// Qubit partition used by the pipeline, top to bottom:
///
///   [ancilla][y register: n][lambda register: n][data register: m]
///
/// The first `row_qubits` data qubits hold the row index of the encoded matrix
/// and are what the phase estimation acts on. For a d x d matrix m = 2 log2 d;
/// for a single d-vector m = row_qubits = log2 d.
class RegisterLayout {
 public:
  RegisterLayout(unsigned eig_bits, unsigned data_qubits, unsigned row_qubits);

  static RegisterLayout for_matrix(unsigned dimension, unsigned eig_bits);
  static RegisterLayout for_vector(unsigned dimension, unsigned eig_bits);

  unsigned eig_bits() const noexcept { return eig_bits_; }
  unsigned data_width() const noexcept { return data_qubits_; }
  unsigned row_width() const noexcept { return row_qubits_; }
  unsigned total_qubits() const noexcept { return 1 + 2 * eig_bits_ + data_qubits_; }

  unsigned ancilla() const noexcept { return 0; }
  unsigned y_offset() const noexcept { return 1; }
  unsigned lambda_offset() const noexcept { return 1 + eig_bits_; }
  unsigned data_offset() const noexcept { return 1 + 2 * eig_bits_; }

  std::vector<unsigned> y_qubits() const;
  std::vector<unsigned> lambda_qubits() const;
  std::vector<unsigned> data_qubits() const;
  std::vector<unsigned> row_qubits() const;

 private:
  unsigned eig_bits_;
  unsigned data_qubits_;
  unsigned row_qubits_;
};

}  // namespace qpca
