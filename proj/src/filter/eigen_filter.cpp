// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/eigen_filter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qpca/builders.hpp"
#include "qpca/errors.hpp"

namespace qpca::filter {

namespace {

using u128 = unsigned __int128;

// round(num / 2^shift), halves rounded up
u128 round_shift(u128 num, unsigned shift) {
  if (shift == 0) return num;
  return (num + (u128{1} << (shift - 1))) >> shift;
}

}  // namespace

FixedPoint FixedPoint::make(std::uint64_t raw, unsigned bits, unsigned frac) {
  if (bits == 0 || bits > 62 || frac > bits) {
    throw InvalidArgument("fixed-point format " + std::to_string(bits) + "." +
                          std::to_string(frac) + " is invalid");
  }
  if (raw >> bits) {
    throw InvalidArgument("raw value " + std::to_string(raw) + " does not fit in " +
                          std::to_string(bits) + " bits");
  }
  return {bits, frac, raw};
}

FixedPoint FixedPoint::from_real(double v, unsigned bits, unsigned frac) {
  if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("fixed-point value must be finite and >= 0");
  const double scaled = std::floor(std::ldexp(v, static_cast<int>(frac)) + 0.5);
  if (scaled >= std::ldexp(1.0, static_cast<int>(bits))) {
    throw InvalidArgument(std::to_string(v) + " does not fit in the fixed-point format");
  }
  return make(static_cast<std::uint64_t>(scaled), bits, frac);
}

double FixedPoint::value() const noexcept {
  return std::ldexp(static_cast<double>(raw), -static_cast<int>(frac));
}

unsigned default_newton_iters(unsigned frac_bits) {
  if (frac_bits <= 1) return 2;
  return static_cast<unsigned>(std::bit_width(frac_bits - 1)) + 2;
}

FixedPoint newton_reciprocal(FixedPoint lambda, unsigned frac_bits, unsigned iters) {
  if (lambda.raw == 0) throw ZeroEigenvalue("reciprocal of a zero eigenvalue");
  if (iters == 0) iters = default_newton_iters(frac_bits);

  // ceil(log2 lambda)
  const int exponent = static_cast<int>(std::bit_width(lambda.raw - 1)) - static_cast<int>(lambda.frac);
  const unsigned int_bits = static_cast<unsigned>(std::max(1, 1 - exponent));
  const unsigned bits = frac_bits + int_bits;
  if (bits > 62) throw InvalidArgument("reciprocal needs more than 62 bits");
  const std::uint64_t max_raw = (std::uint64_t{1} << bits) - 1;

  const int start = static_cast<int>(frac_bits) - exponent;
  u128 z = start >= 0 ? u128{1} << start : 0;
  for (unsigned i = 0; i < iters; ++i) {
    const u128 sq = round_shift(z * z * lambda.raw, frac_bits + lambda.frac);
    z = 2 * z > sq ? 2 * z - sq : 0;
    z = std::min<u128>(z, max_raw);
  }
  return FixedPoint::make(static_cast<std::uint64_t>(z), bits, frac_bits);
}

double shrink(double lambda, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("threshold must be positive");
  if (lambda <= 0.0) return 0.0;
  return std::max(1.0 - tau / lambda, 0.0);
}

void FilterParams::validate() const {
  if (!std::isfinite(tau) || !(tau > 0.0)) throw InvalidArgument("tau must be positive and finite");
  if (n_bits == 0 || n_bits > 16) throw InvalidArgument("n_bits must be in [1, 16]");
  const unsigned w = resolved_work_bits();
  if (w < n_bits || w > 40) throw InvalidArgument("work_frac_bits must be in [n_bits, 40]");
}

FilterTable::FilterTable(unsigned n_bits, std::vector<std::uint64_t> y_raw)
    : n_bits_(n_bits), y_raw_(std::move(y_raw)) {
  if (y_raw_.size() != (std::uint64_t{1} << n_bits_)) {
    throw InvalidArgument("filter table needs 2^n entries");
  }
  for (auto y : y_raw_) {
    if (y >> n_bits_) throw InvalidArgument("filter table entry exceeds the register");
  }
}

double FilterTable::y(std::uint64_t lambda_raw) const {
  return std::ldexp(static_cast<double>(y_raw(lambda_raw)), -static_cast<int>(n_bits_));
}

FilterTable build_filter_table(const FilterParams& params) {
  params.validate();
  const unsigned n = params.n_bits;
  const unsigned w = params.resolved_work_bits();
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t y_max = size - 1;
  // thresholds at or above 2^n filter everything; clamp so tau fits the format
  const double tau = std::min(params.tau, std::ldexp(1.0, static_cast<int>(n)));
  const u128 tau_raw = FixedPoint::from_real(tau, n + w + 1, w).raw;
  const u128 one = u128{1} << w;

  std::vector<std::uint64_t> y(size, 0);
  for (std::uint64_t lambda = 1; lambda < size; ++lambda) {
    if ((u128{lambda} << w) <= tau_raw) continue;
    const FixedPoint z = newton_reciprocal(FixedPoint::integer(lambda, n), w, params.resolved_iters());
    const u128 tau_z = round_shift(tau_raw * z.raw, w);
    const u128 y_work = one > tau_z ? one - tau_z : 0;
    const auto y_n = static_cast<std::uint64_t>(round_shift(y_work, w - n));
    y[lambda] = std::clamp<std::uint64_t>(y_n, 1, y_max);
  }
  return FilterTable(n, std::move(y));
}

FilterTable build_shrink_table(const FilterParams& params) {
  params.validate();
  const unsigned n = params.n_bits;
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> y(size, 0);
  for (std::uint64_t lambda = 1; lambda < size; ++lambda) {
    if (!(static_cast<double>(lambda) > params.tau)) continue;
    const double scaled = std::floor(std::ldexp(shrink(static_cast<double>(lambda), params.tau), static_cast<int>(n)) + 0.5);
    y[lambda] = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(scaled), 1, size - 1);
  }
  return FilterTable(n, std::move(y));
}

sim::GateOp build_filter_unitary(const FilterTable& table, const RegisterLayout& layout) {
  const unsigned n = layout.eig_bits();
  if (table.n_bits() != n) {
    throw DimensionMismatch("filter table is " + std::to_string(table.n_bits()) +
                            " bits, registers are " + std::to_string(n));
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> image(size * size);
  for (std::uint64_t c = 0; c < size; ++c) {
    for (std::uint64_t l = 0; l < size; ++l) {
      image[(c << n) | l] = (((c + table.y_raw(l)) & (size - 1)) << n) | l;
    }
  }
  std::vector<unsigned> targets = layout.y_qubits();
  for (unsigned q : layout.lambda_qubits()) targets.push_back(q);
  return sim::GateOp::permutation(std::move(image), std::move(targets), {}, "filter");
}

sim::Circuit build_filter_circuit(const FilterTable& table, const RegisterLayout& layout) {
  const unsigned n = layout.eig_bits();
  if (table.n_bits() != n) throw DimensionMismatch("filter table width differs from the layout");
  const unsigned total = layout.total_qubits();
  const std::uint64_t size = std::uint64_t{1} << n;

  sim::Circuit c(total);
  c.append(build::build_qft(n).embedded(layout.y_offset(), total));
  for (std::uint64_t l = 0; l < size; ++l) {
    const std::uint64_t y = table.y_raw(l);
    if (y == 0) continue;
    std::vector<sim::Control> when;
    for (unsigned b = 0; b < n; ++b) {
      when.push_back({layout.lambda_offset() + b, ((l >> (n - 1 - b)) & 1) != 0});
    }
    for (unsigned j = 0; j < n; ++j) {
      // phase y * 2^(n-1-j) / 2^n turns, reduced mod 1
      const std::uint64_t num = (y << (n - 1 - j)) & (size - 1);
      if (num == 0) continue;
      const double angle = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(num), -static_cast<int>(n));
      c.append(sim::gates::phase(angle, layout.y_offset() + j).with_controls(when));
    }
  }
  c.append(build::build_inverse_qft(n).embedded(layout.y_offset(), total));
  return c.relabeled("filter");
}

sim::Circuit build_qft_adder(unsigned width) {
  if (width == 0 || width > 8) throw InvalidArgument("adder width must be in [1, 8]");
  const unsigned total = 2 * width;
  sim::Circuit c(total);
  c.append(build::build_qft(width).embedded(width, total));
  for (unsigned i = 0; i < width; ++i) {
    for (unsigned j = 0; j < width; ++j) {
      const unsigned e = (width - 1 - i) + (width - 1 - j);
      if (e >= width) continue;
      const double angle = 2.0 * std::numbers::pi * std::ldexp(1.0, static_cast<int>(e) - static_cast<int>(width));
      c.append(sim::gates::phase(angle, width + j).with_controls({{i, true}}));
    }
  }
  c.append(build::build_inverse_qft(width).embedded(width, total));
  return c.relabeled("qft_add");
}

std::int64_t count_filter_gates(unsigned n) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  return 8 * (2 * static_cast<std::int64_t>(n));
}

}  // namespace qpca::filter
