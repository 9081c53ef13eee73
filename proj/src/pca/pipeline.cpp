// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/pipeline.hpp"

#include <cmath>
#include <string>

#include "qpca/complexity.hpp"
#include "qpca/errors.hpp"

namespace qpca::pca {

using sim::Circuit;
using sim::Complex;
using sim::StateVector;

namespace {

constexpr double kResidualTolerance = 1e-9;

std::uint64_t work_mask(const RegisterLayout& layout) {
  const std::uint64_t bits = (std::uint64_t{1} << (2 * layout.eig_bits())) - 1;
  return bits << layout.data_width();
}

}  // namespace

OracleResult classical_pca_oracle(const HermitianInput& input, double tau) {
  const auto& values = input.eigenvalues();
  const auto& vectors = input.eigenvectors();
  const Eigen::Index d = values.size();

  OracleResult out;
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (!(values(k) > tau)) continue;
    ++out.kept;
    out.kept_eigenvalues.push_back(values(k));
    projected += values(k) * vectors.col(k) * vectors.col(k).transpose();
  }
  if (out.kept == 0) {
    throw AllComponentsFiltered("all components filtered: no eigenvalue exceeds tau = " +
                                std::to_string(tau));
  }
  const double norm = projected.norm();
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) out.expected_state.push_back(projected(r, c) / norm);
  }
  return out;
}

Circuit build_controlled_flip(const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  c.append(sim::gates::x(layout.ancilla()).with_label("cu"));
  std::vector<sim::Control> all_zero;
  for (unsigned q : layout.y_qubits()) all_zero.push_back({q, false});
  c.append(sim::gates::x(layout.ancilla()).with_controls(all_zero).with_label("cu"));
  return c;
}

StateVector controlled_flip(StateVector state, const RegisterLayout& layout) {
  return sim::run(std::move(state), build_controlled_flip(layout));
}

StateVector uncompute(StateVector state, const RegisterLayout& layout, const sim::GateOp& filter,
                      const Circuit& pe) {
  if (pe.num_qubits() != layout.total_qubits()) {
    throw DimensionMismatch("phase-estimation circuit width differs from the layout");
  }
  state = sim::apply(std::move(state), filter.adjoint());
  return sim::run(std::move(state), pe.inverse());
}

StateVector second_phase_estimation(StateVector state, const build::PhaseEstimationSpec& spec,
                                    const RegisterLayout& layout) {
  return sim::run(std::move(state), build::build_phase_estimation(spec, layout));
}

std::map<std::uint64_t, double> lambda_histogram(const StateVector& state,
                                                 const RegisterLayout& layout) {
  const std::uint64_t reg_mask = (std::uint64_t{1} << layout.eig_bits()) - 1;
  std::map<std::uint64_t, double> h;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const double p = state.probability(i);
    if (p == 0.0) continue;
    h[(i >> layout.data_width()) & reg_mask] += p;
  }
  std::erase_if(h, [](const auto& kv) { return kv.second <= 1e-12; });
  return h;
}

double register_residual(const StateVector& state, const RegisterLayout& layout) {
  const std::uint64_t mask = work_mask(layout);
  double p = 0.0;
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if (i & mask) p += state.probability(i);
  }
  return p;
}

std::vector<Complex> data_amplitudes(const StateVector& state, const RegisterLayout& layout,
                                     int ancilla) {
  if (state.num_qubits() != layout.total_qubits()) {
    throw DimensionMismatch("state width differs from the layout");
  }
  const std::uint64_t prefix = ancilla ? std::uint64_t{1} << (state.num_qubits() - 1) : 0;
  const std::uint64_t count = std::uint64_t{1} << layout.data_width();
  std::vector<Complex> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = state[prefix | i];
  return out;
}

QpcaResult run_qpca(const HermitianInput& input, const QpcaConfig& config) {
  if (!std::isfinite(config.tau) || !(config.tau > 0.0)) {
    throw InvalidArgument("tau must be positive and finite");
  }
  if (config.n_bits == 0 || config.n_bits > 8) throw InvalidArgument("n_bits must be in [1, 8]");
  if (config.mode == Mode::Sampled && config.shots == 0) {
    throw InvalidArgument("sampled mode needs at least one shot");
  }

  QpcaResult result;
  const RegisterLayout layout = RegisterLayout::for_matrix(input.dimension(), config.n_bits);
  result.layout = layout;
  const unsigned total = layout.total_qubits();
  if (total > sim::kMaxQubits) {
    throw InvalidArgument("pipeline needs " + std::to_string(total) + " qubits, limit is " +
                          std::to_string(sim::kMaxQubits));
  }

  const build::PhaseEstimationSpec spec(input.matrix(), config.n_bits);
  if (!spec.exact_spectrum()) {
    result.warnings.push_back(
        "eigenvalues are not all integers in [0, 2^n); phase estimation is approximate");
  }

  result.input_state = input.encoded_state();
  const Circuit prep =
      build::build_state_prep(result.input_state, layout.data_width()).embedded(layout.data_offset(), total);
  const Circuit pe = build::build_phase_estimation(spec, layout);

  const filter::FilterParams params{.tau = config.tau, .n_bits = config.n_bits};
  const filter::FilterTable table = config.arithmetic == FilterArithmetic::FixedPointNewton
                                        ? filter::build_filter_table(params)
                                        : filter::build_shrink_table(params);
  const sim::GateOp filter_op = filter::build_filter_unitary(table, layout);
  const Circuit flip = build_controlled_flip(layout);

  // Steps 1-5: everything up to the ancilla measurement.
  StateVector state = sim::run(StateVector::zero(total), prep);
  state = sim::run(std::move(state), pe);
  state = sim::apply(std::move(state), filter_op);
  state = sim::run(std::move(state), flip);
  state = uncompute(std::move(state), layout, filter_op, pe);

  result.uncompute_residual = register_residual(state, layout);
  if (result.uncompute_residual > kResidualTolerance) {
    throw InvariantViolation("work registers hold probability " +
                             std::to_string(result.uncompute_residual) + " after uncompute");
  }

  // Step 6: post-selection on ancilla = 1.
  sim::PostSelection selected = sim::post_select(state, layout.ancilla(), 1);
  result.pre_measurement = state;
  result.post_selected = selected.state;

  const auto exact_amps = data_amplitudes(selected.state, layout, 1);
  if (config.mode == Mode::Exact) {
    result.success_prob = selected.probability;
    for (const auto& a : exact_amps) {
      result.output_amps.push_back(a.real());
      result.max_imag = std::max(result.max_imag, std::abs(a.imag()));
    }
  } else {
    const sim::Histogram shots = sim::sample(state, config.shots, config.seed);
    const std::uint64_t ancilla_bit = std::uint64_t{1} << (total - 1);
    const std::uint64_t data_mask = (std::uint64_t{1} << layout.data_width()) - 1;
    std::uint64_t accepted = 0;
    for (const auto& [index, count] : shots) {
      if (!(index & ancilla_bit)) continue;
      accepted += count;
      result.data_counts[index & data_mask] += count;
    }
    if (accepted == 0) {
      throw ZeroProbabilityOutcome("no shot measured the ancilla as 1");
    }
    result.shots = config.shots;
    result.accepted_shots = accepted;
    result.success_prob = static_cast<double>(accepted) / static_cast<double>(config.shots);
    result.output_amps.assign(exact_amps.size(), 0.0);
    for (const auto& [index, count] : result.data_counts) {
      result.output_amps[index] = std::sqrt(static_cast<double>(count) / static_cast<double>(accepted));
    }
  }

  // Step 7: second phase estimation on the cleaned lambda register.
  result.joint_state = second_phase_estimation(selected.state, spec, layout);
  result.lambda_histogram = lambda_histogram(result.joint_state, layout);

  const std::uint64_t reg_size = std::uint64_t{1} << config.n_bits;
  for (Eigen::Index k = 0; k < input.eigenvalues().size(); ++k) {
    const double lambda = input.eigenvalues()(k);
    if (std::abs(lambda) <= 1e-9 * std::max(1.0, input.eigenvalues().cwiseAbs().maxCoeff())) continue;
    const double reg = std::round(lambda);
    if (reg < 0.0 || reg >= static_cast<double>(reg_size)) continue;
    if (table.kept(static_cast<std::uint64_t>(reg))) {
      ++result.kept_count;
      result.kept_eigenvalues.push_back(lambda);
    }
  }

  try {
    const OracleResult oracle = classical_pca_oracle(input, config.tau);
    result.expected_state = oracle.expected_state;
    std::vector<Complex> got(result.output_amps.begin(), result.output_amps.end());
    std::vector<Complex> want(oracle.expected_state.begin(), oracle.expected_state.end());
    if (config.mode == Mode::Sampled) {
      for (auto& w : want) w = std::abs(w);
    }
    result.fidelity = sim::fidelity(got, want);
    if (oracle.kept != result.kept_count) {
      result.warnings.push_back("fixed-point threshold keeps " + std::to_string(result.kept_count) +
                                " components, classical PCA keeps " + std::to_string(oracle.kept));
    }
  } catch (const AllComponentsFiltered&) {
    result.warnings.push_back("classical PCA filters every component at this tau");
    result.fidelity = 0.0;
  }

  Circuit forward(total);
  forward.append(prep).append(pe);
  forward.append(filter_op);
  forward.append(flip);
  forward.append(filter_op.adjoint().with_label("uncompute"));
  forward.append(pe.inverse().relabeled("uncompute"));
  forward.append(build::build_phase_estimation(spec, layout).relabeled("pe2"));
  result.simulated_ops = forward.label_counts();
  result.total_gates = cost::cost_proposed(config.n_bits, layout.data_width()).total;
  return result;
}

}  // namespace qpca::pca
