// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qpca/errors.hpp"

namespace qpca::sim {

namespace {

unsigned qubits_for_size(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw InvalidArgument("amplitude count " + std::to_string(size) + " is not a power of two");
  }
  auto q = static_cast<unsigned>(std::countr_zero(size));
  if (q > kMaxQubits) {
    throw InvalidArgument("state of " + std::to_string(q) + " qubits exceeds the " +
                          std::to_string(kMaxQubits) + "-qubit limit");
  }
  return q;
}

double squared_norm(const std::vector<Complex>& amps) {
  double s = 0.0;
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("non-finite amplitude");
    }
    s += std::norm(a);
  }
  return s;
}

}  // namespace

StateVector StateVector::zero(unsigned num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
  if (num_qubits > kMaxQubits) {
    throw InvalidArgument("too many qubits: " + std::to_string(num_qubits));
  }
  std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) {
    throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
  unsigned q = qubits_for_size(amps.size());
  double n = std::sqrt(squared_norm(amps));
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidArgument("state is not normalized (norm " + std::to_string(n) + ")");
  }
  return StateVector(q, std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
  unsigned q = qubits_for_size(amps.size());
  double n = std::sqrt(squared_norm(amps));
  if (n == 0.0) {
    throw InvalidArgument("cannot normalize the zero vector");
  }
  for (auto& a : amps) a /= n;
  return StateVector(q, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double fidelity(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("fidelity of vectors with " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " entries");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::min(1.0, std::abs(overlap));
}

double fidelity(const StateVector& a, const StateVector& b) {
  return fidelity(a.amplitudes(), b.amplitudes());
}

}  // namespace qpca::sim
