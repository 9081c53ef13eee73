// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/commands.hpp"

#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qpca/complexity.hpp"
#include "qpca/errors.hpp"
#include "qpca/matrix_io.hpp"

namespace qpca::cli {

namespace {

std::string format_sig10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void report(std::ostream& err, const char* kind, const std::string& what) {
  std::string line = what;
  for (auto& c : line) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  err << "error: " << kind << ": " << line << '\n';
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << contents;
  if (!out) throw InvalidArgument("failed writing " + path.string());
}

nlohmann::ordered_json rounded(const std::vector<double>& values) {
  auto arr = nlohmann::ordered_json::array();
  for (double v : values) arr.push_back(round_sig10(v));
  return arr;
}

}  // namespace

double round_sig10(double v) {
  if (v == 0.0) return 0.0;  // folds -0
  return std::strtod(format_sig10(v).c_str(), nullptr);
}

nlohmann::ordered_json result_to_json(const pca::QpcaResult& r, const RunSpec& spec) {
  using J = nlohmann::ordered_json;
  J doc;
  doc["input_state"] = rounded(r.input_state);
  doc["tau"] = spec.tau;
  doc["eig_bits"] = spec.eig_bits;
  doc["mode"] = spec.mode == pca::Mode::Exact ? "exact" : "sampled";
  doc["qubits"] = r.layout.total_qubits();
  doc["kept_count"] = r.kept_count;
  doc["kept_eigenvalues"] = rounded(r.kept_eigenvalues);
  doc["success_probability"] = round_sig10(r.success_prob);
  doc["output_amplitudes"] = rounded(r.output_amps);
  J hist = J::object();
  for (const auto& [value, p] : r.lambda_histogram) hist[std::to_string(value)] = round_sig10(p);
  doc["lambda_histogram"] = hist;
  doc["fidelity_vs_classical"] = round_sig10(r.fidelity);
  doc["expected_amplitudes"] = rounded(r.expected_state);
  const unsigned m = r.layout.data_width();
  doc["gate_counts"] = {
      {"proposed", cost::cost_proposed(spec.eig_bits, m).total},
      {"baseline", cost::cost_baseline(spec.eig_bits, m).total},
      {"ratio", round_sig10(cost::gate_ratio(spec.eig_bits))},
  };
  if (r.shots) {
    doc["shots"] = *r.shots;
    doc["seed"] = spec.seed;
    doc["accepted_shots"] = r.accepted_shots.value_or(0);
    J counts = J::object();
    for (const auto& [index, count] : r.data_counts) counts[std::to_string(index)] = count;
    doc["counts"] = counts;
  }
  doc["warnings"] = r.warnings;
  return doc;
}

std::string result_to_csv(const pca::QpcaResult& r) {
  std::ostringstream out;
  out << "basis_index,probability\n";
  for (std::size_t i = 0; i < r.output_amps.size(); ++i) {
    out << i << ',' << format_sig10(round_sig10(r.output_amps[i] * r.output_amps[i])) << '\n';
  }
  return out.str();
}

std::string analyze_csv(unsigned n_min, unsigned n_max) {
  std::ostringstream out;
  out << "n,proposed_total,baseline_total,ratio\n";
  for (unsigned n = n_min; n <= n_max; ++n) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.4f", cost::gate_ratio(n));
    out << n << ',' << cost::cost_proposed(n, 0).total << ',' << cost::cost_baseline(n, 0).total << ','
        << ratio << '\n';
  }
  return out.str();
}

int run_command(const RunSpec& spec, std::ostream& err) {
  try {
    if (!(spec.tau > 0.0) || !std::isfinite(spec.tau)) throw InvalidArgument("--tau must be > 0");
    if (spec.eig_bits < 1 || spec.eig_bits > 6) throw InvalidArgument("--eig-bits must be in [1, 6]");
    if (spec.mode == pca::Mode::Sampled && spec.shots < 1) throw InvalidArgument("--shots must be >= 1");
    if (spec.out_path.empty()) throw InvalidArgument("--out is required");

    const pca::HermitianInput input = parse_matrix(spec.matrix_path);
    const pca::QpcaConfig config{.tau = spec.tau,
                                 .n_bits = spec.eig_bits,
                                 .mode = spec.mode,
                                 .shots = spec.shots,
                                 .seed = spec.seed};
    const pca::QpcaResult result = pca::run_qpca(input, config);

    write_file(spec.out_path, result_to_json(result, spec).dump(2) + "\n");
    std::filesystem::path csv = spec.csv_path.value_or(std::filesystem::path(spec.out_path).replace_extension(".csv"));
    write_file(csv, result_to_csv(result));
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    return kExitOk;
  } catch (const AllComponentsFiltered& e) {
    report(err, e.kind(), e.what());
    return kExitFiltered;
  } catch (const ZeroProbabilityOutcome& e) {
    report(err, "all-components-filtered", std::string("all components filtered (") + e.what() + ")");
    return kExitFiltered;
  } catch (const InvariantViolation& e) {
    report(err, e.kind(), e.what());
    return kExitInternal;
  } catch (const Error& e) {
    report(err, e.kind(), e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return kExitInternal;
  }
}

int analyze_command(const AnalyzeSpec& spec, std::ostream& err) {
  try {
    if (spec.n_min < 1 || spec.n_min > spec.n_max) {
      throw InvalidArgument("need 1 <= --n-min <= --n-max");
    }
    if (spec.out_path.empty()) throw InvalidArgument("--out is required");
    write_file(spec.out_path, analyze_csv(spec.n_min, spec.n_max));
    return kExitOk;
  } catch (const Error& e) {
    report(err, e.kind(), e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace qpca::cli
