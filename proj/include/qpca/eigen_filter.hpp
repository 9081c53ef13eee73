// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qpca/circuit.hpp"
#include "qpca/register_layout.hpp"

namespace qpca::filter {

/// Unsigned fixed-point number: value = raw / 2^frac, raw < 2^bits.
struct FixedPoint {
  unsigned bits = 0;
  unsigned frac = 0;
  std::uint64_t raw = 0;

  /// Throws InvalidArgument unless frac <= bits <= 62 and raw < 2^bits.
  static FixedPoint make(std::uint64_t raw, unsigned bits, unsigned frac);
  static FixedPoint integer(std::uint64_t raw, unsigned bits) { return make(raw, bits, 0); }
  /// Round-half-up conversion; throws if v is negative or does not fit.
  static FixedPoint from_real(double v, unsigned bits, unsigned frac);

  double value() const noexcept;
  bool operator==(const FixedPoint&) const = default;
};

/// Iterations that take z0 = 2^-ceil(log2 lambda) to frac_bits correct bits.
unsigned default_newton_iters(unsigned frac_bits);

/// z <- 2z - z^2 lambda in fixed point with `frac_bits` fractional bits and
/// round-half-up after every multiply, starting from 2^-ceil(log2 lambda).
/// The result has enough integer bits to hold 1/lambda. iters == 0 selects
/// default_newton_iters(frac_bits). Throws ZeroEigenvalue for lambda == 0.
FixedPoint newton_reciprocal(FixedPoint lambda, unsigned frac_bits, unsigned iters = 0);

/// max(1 - tau / lambda, 0), with lambda == 0 mapped to 0.
double shrink(double lambda, double tau);

struct FilterParams {
  double tau = 1.0;
  unsigned n_bits = 2;
  unsigned newton_iters = 0;    // 0: default_newton_iters(work_frac_bits())
  unsigned work_frac_bits = 0;  // 0: 2 n + 2 guard-extended precision for z and tau

  unsigned resolved_work_bits() const noexcept { return work_frac_bits ? work_frac_bits : 2 * n_bits + 2; }
  unsigned resolved_iters() const noexcept {
    return newton_iters ? newton_iters : default_newton_iters(resolved_work_bits());
  }
  /// tau > 0 and finite, n_bits in [1, 16], work bits in [n_bits, 40].
  void validate() const;
};

/// y register contents (n fractional bits) for every lambda register value.
class FilterTable {
 public:
  FilterTable(unsigned n_bits, std::vector<std::uint64_t> y_raw);

  unsigned n_bits() const noexcept { return n_bits_; }
  std::uint64_t size() const noexcept { return y_raw_.size(); }
  std::uint64_t y_raw(std::uint64_t lambda_raw) const { return y_raw_.at(lambda_raw); }
  double y(std::uint64_t lambda_raw) const;
  bool kept(std::uint64_t lambda_raw) const { return y_raw(lambda_raw) != 0; }
  const std::vector<std::uint64_t>& entries() const noexcept { return y_raw_; }

 private:
  unsigned n_bits_;
  std::vector<std::uint64_t> y_raw_;
};

/// Fixed-point path: z = newton_reciprocal(lambda), y = 1 - tau z, rounded to
/// n bits. lambda <= tau (compared in the working format) gives exactly 0; a
/// kept lambda whose y rounds to 0 is given one ulp, and y saturates at
/// 2^n - 1.
FilterTable build_filter_table(const FilterParams& params);

/// Same layout, but y = round(shrink(lambda, tau) 2^n) with a real-valued
/// threshold. Used to show the fixed-point reciprocal is the only
/// approximation in the pipeline.
FilterTable build_shrink_table(const FilterParams& params);

/// Permutation on (y register, lambda register): |c>|l> -> |c + y(l) mod 2^n>|l>.
sim::GateOp build_filter_unitary(const FilterTable& table, const RegisterLayout& layout);

/// The same map as QFT arithmetic: QFT on y, phase additions of the constant
/// y(l) controlled on the lambda register reading l, inverse QFT.
sim::Circuit build_filter_circuit(const FilterTable& table, const RegisterLayout& layout);

/// Draper adder on 2 * width qubits: |a>|b> -> |a>|a + b mod 2^width>.
sim::Circuit build_qft_adder(unsigned width);

/// Modeled gate cost of the filter: 8 QFT-arithmetic blocks on 2n qubits.
std::int64_t count_filter_gates(unsigned n);

}  // namespace qpca::filter
