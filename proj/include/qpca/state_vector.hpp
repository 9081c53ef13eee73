// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qpca::sim {

using Complex = std::complex<double>;

inline constexpr unsigned kMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-9;

/// Dense amplitude vector over `num_qubits` qubits.
///
/// Qubit 0 is the most significant bit of the basis-state index, so qubit q
/// maps to bit (num_qubits - 1 - q). The vector is always normalized to
/// within kNormTolerance; operations return new states rather than mutating.
class StateVector {
 public:
  static StateVector zero(unsigned num_qubits);
  static StateVector basis(unsigned num_qubits, std::uint64_t index);
  /// Throws InvalidArgument unless the size is a power of two, every entry is
  /// finite and the norm is 1 within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amps);
  /// Normalizes first; throws on a zero or non-finite vector.
  static StateVector normalized(std::vector<Complex> amps);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::uint64_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::uint64_t i) const { return amps_[i]; }
  double probability(std::uint64_t i) const { return std::norm(amps_[i]); }
  double norm() const;

  bool operator==(const StateVector&) const = default;

 private:
  StateVector(unsigned num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  friend class Engine;

  unsigned num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// |<a|b>|. Throws DimensionMismatch on unequal sizes.
double fidelity(std::span<const Complex> a, std::span<const Complex> b);
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qpca::sim
