// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qpca/pipeline.hpp"

namespace qpca::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitFiltered = 3,
  kExitInternal = 4,
};

struct RunSpec {
  std::filesystem::path matrix_path;
  double tau = 1.0;
  unsigned eig_bits = 2;
  pca::Mode mode = pca::Mode::Exact;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  std::filesystem::path out_path;
  /// Defaults to out_path with a .csv extension.
  std::optional<std::filesystem::path> csv_path;
};

struct AnalyzeSpec {
  unsigned n_min = 1;
  unsigned n_max = 1;
  std::filesystem::path out_path;
};

/// Rounds to 10 significant digits; values written to result files go
/// through this so re-reading them is exact.
double round_sig10(double v);

nlohmann::ordered_json result_to_json(const pca::QpcaResult& result, const RunSpec& spec);
/// basis_index,probability rows for the post-selected data register.
std::string result_to_csv(const pca::QpcaResult& result);
/// n,proposed_total,baseline_total,ratio with the ratio to 4 decimals.
std::string analyze_csv(unsigned n_min, unsigned n_max);

/// Both return an ExitCode; failures print one `error: <kind>: <message>`
/// line to `err`.
int run_command(const RunSpec& spec, std::ostream& err);
int analyze_command(const AnalyzeSpec& spec, std::ostream& err);

}  // namespace qpca::cli
