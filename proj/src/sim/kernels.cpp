// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef QPCA_HAVE_OPENMP
#include <omp.h>
#endif

namespace qpca::sim {

namespace {

using Index = std::uint64_t;

struct Wiring {
  // offsets[l]: global index bits contributed by local target index l
  std::vector<Index> offsets;
  Index target_mask = 0;
  Index control_mask = 0;   // every control bit
  Index control_value = 0;  // required value of those bits
  std::vector<unsigned> fixed_positions;  // ascending
};

inline unsigned bit_of(unsigned num_qubits, unsigned qubit) { return num_qubits - 1 - qubit; }

Wiring wire(unsigned num_qubits, const GateOp& op) {
  Wiring w;
  const auto& targets = op.targets();
  const auto k = static_cast<unsigned>(targets.size());
  w.offsets.assign(op.dimension(), 0);
  for (Index l = 0; l < op.dimension(); ++l) {
    Index off = 0;
    for (unsigned t = 0; t < k; ++t) {
      if ((l >> (k - 1 - t)) & 1) off |= Index{1} << bit_of(num_qubits, targets[t]);
    }
    w.offsets[l] = off;
  }
  for (auto t : targets) {
    w.target_mask |= Index{1} << bit_of(num_qubits, t);
    w.fixed_positions.push_back(bit_of(num_qubits, t));
  }
  for (const auto& c : op.controls()) {
    Index b = Index{1} << bit_of(num_qubits, c.qubit);
    w.control_mask |= b;
    if (c.on_one) w.control_value |= b;
    w.fixed_positions.push_back(bit_of(num_qubits, c.qubit));
  }
  std::sort(w.fixed_positions.begin(), w.fixed_positions.end());
  return w;
}

// Spreads the bits of `j` around zeros at the (ascending) fixed positions.
inline Index insert_zero_bits(Index j, const std::vector<unsigned>& positions) {
  for (unsigned p : positions) {
    Index low = j & ((Index{1} << p) - 1);
    j = ((j >> p) << (p + 1)) | low;
  }
  return j;
}

}  // namespace

void apply_serial(std::span<Complex> amps, unsigned num_qubits, const GateOp& op) {
  const Wiring w = wire(num_qubits, op);
  const Index dim = op.dimension();
  const auto k = static_cast<unsigned>(op.targets().size());
  std::vector<Complex> out(amps.begin(), amps.end());

  for (Index i = 0; i < amps.size(); ++i) {
    if ((i & w.control_mask) != w.control_value) continue;
    Index local = 0;
    for (unsigned t = 0; t < k; ++t) {
      local = (local << 1) | ((i >> bit_of(num_qubits, op.targets()[t])) & 1);
    }
    const Index base = i & ~w.target_mask;
    if (op.kind() == GateOp::Kind::Dense) {
      const auto& m = op.matrix();
      Complex acc = 0.0;
      for (Index c = 0; c < dim; ++c) {
        acc += m(static_cast<Eigen::Index>(local), static_cast<Eigen::Index>(c)) *
               amps[base | w.offsets[c]];
      }
      out[i] = acc;
    } else {
      out[base | w.offsets[op.image()[local]]] = amps[i];
    }
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

void apply_parallel(std::span<Complex> amps, unsigned num_qubits, const GateOp& op) {
  const Wiring w = wire(num_qubits, op);
  const Index dim = op.dimension();
  const auto groups = static_cast<std::int64_t>(amps.size() >> w.fixed_positions.size());
  const bool dense = op.kind() == GateOp::Kind::Dense;
  // Eigen default storage is column-major: m(r, c) = data[c * dim + r].
  const Complex* m = dense ? op.matrix().data() : nullptr;
  const Index* image = dense ? nullptr : op.image().data();
  Complex* a = amps.data();

#ifdef QPCA_HAVE_OPENMP
#pragma omp parallel if (static_cast<Index>(groups) * dim >= (Index{1} << 14))
#endif
  {
    std::vector<Complex> in(dim);
    std::vector<Complex> out(dim);
#ifdef QPCA_HAVE_OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t j = 0; j < groups; ++j) {
      const Index base =
          insert_zero_bits(static_cast<Index>(j), w.fixed_positions) | w.control_value;
      for (Index c = 0; c < dim; ++c) in[c] = a[base | w.offsets[c]];
      if (dense) {
        for (Index r = 0; r < dim; ++r) {
          Complex acc = 0.0;
          for (Index c = 0; c < dim; ++c) acc += m[c * dim + r] * in[c];
          out[r] = acc;
        }
      } else {
        for (Index c = 0; c < dim; ++c) out[image[c]] = in[c];
      }
      for (Index r = 0; r < dim; ++r) a[base | w.offsets[r]] = out[r];
    }
  }
}

int kernel_threads() {
#ifdef QPCA_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qpca::sim
