// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qpca/commands.hpp"

int main(int argc, char** argv) {
  using namespace qpca;

  CLI::App app{"Statevector simulation of low-complexity quantum PCA"};
  app.require_subcommand(1);

  cli::RunSpec run;
  std::string mode = "exact";
  std::string matrix, out, csv;
  auto* run_cmd = app.add_subcommand("run", "Run the qPCA pipeline on a symmetric matrix");
  run_cmd->add_option("--matrix", matrix, "CSV or JSON matrix file")->required();
  run_cmd->add_option("--tau", run.tau, "Eigenvalue threshold")->required();
  run_cmd->add_option("--eig-bits", run.eig_bits, "Eigenvalue register width n")->required();
  run_cmd->add_option("--mode", mode, "exact | sampled")->check(CLI::IsMember({"exact", "sampled"}));
  run_cmd->add_option("--shots", run.shots, "Shots in sampled mode");
  run_cmd->add_option("--seed", run.seed, "Sampling seed");
  run_cmd->add_option("--out", out, "Result JSON path")->required();
  run_cmd->add_option("--csv", csv, "Plot CSV path (default: --out with .csv)");

  cli::AnalyzeSpec analyze;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Gate-count table for both algorithms");
  analyze_cmd->add_option("--n-min", analyze.n_min)->required();
  analyze_cmd->add_option("--n-max", analyze.n_max)->required();
  analyze_cmd->add_option("--out", analyze_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return cli::kExitValidation;
  }

  if (*run_cmd) {
    run.matrix_path = matrix;
    run.out_path = out;
    run.mode = mode == "sampled" ? pca::Mode::Sampled : pca::Mode::Exact;
    if (!csv.empty()) run.csv_path = csv;
    return cli::run_command(run, std::cerr);
  }
  analyze.out_path = analyze_out;
  return cli::analyze_command(analyze, std::cerr);
}
