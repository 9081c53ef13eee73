// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qpca/kernels.hpp"
#include "qpca/pipeline.hpp"

using namespace qpca;
using namespace qpca::sim;

namespace {

std::vector<Complex> random_amps(unsigned q) {
  std::mt19937_64 rng(q);
  std::normal_distribution<double> g;
  std::vector<Complex> v(std::size_t{1} << q);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v;
}

GateOp make_op(int which, unsigned q) {
  switch (which) {
    case 0:
      return gates::h(q / 2);
    case 1: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(4, 4);
      Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
      return GateOp::dense(u, {1, q - 1});
    }
    case 2:
      return gates::ry(0.3, q - 1).with_controls({{0, true}, {2, false}});
    default: {
      std::vector<std::uint64_t> image(16);
      for (std::uint64_t i = 0; i < 16; ++i) image[i] = (i + 5) % 16;
      return GateOp::permutation(image, {1, 2, 3, 4});
    }
  }
}

template <bool Parallel>
void BM_Kernel(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  const GateOp op = make_op(static_cast<int>(state.range(1)), q);
  auto amps = random_amps(q);
  for (auto _ : state) {
    if constexpr (Parallel) {
      apply_parallel(amps, q, op);
    } else {
      apply_serial(amps, q, op);
    }
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * (std::int64_t{1} << q));
}

// {qubits, op}: 0 = 1q dense, 1 = 2q dense, 2 = controlled Ry, 3 = permutation
void KernelArgs(benchmark::internal::Benchmark* b) {
  for (int q : {12, 16, 20})
    for (int op = 0; op < 4; ++op) b->Args({q, op});
}

void BM_Pipeline(benchmark::State& state) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(4, 4);
  c.diagonal() << 0, 1, 2, 3;
  const auto input = pca::HermitianInput::from_matrix(c);
  pca::QpcaConfig cfg;
  cfg.tau = 1.8;
  cfg.n_bits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pca::run_qpca(input, cfg).success_prob);
}

}  // namespace

BENCHMARK(BM_Kernel<false>)->Name("serial")->Apply(KernelArgs);
BENCHMARK(BM_Kernel<true>)->Name("parallel")->Apply(KernelArgs);
BENCHMARK(BM_Pipeline)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
