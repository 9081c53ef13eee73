// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qpca/commands.hpp"
#include "qpca/errors.hpp"
#include "qpca/matrix_io.hpp"

using namespace qpca;
using namespace qpca::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kData = QPCA_TEST_DATA;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("qpca_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunSpec spec(const char* matrix, double tau) const {
    RunSpec s;
    s.matrix_path = kData / matrix;
    s.tau = tau;
    s.out_path = dir_ / "out.json";
    return s;
  }

  fs::path dir_;
};

}  // namespace

TEST(MatrixIo, ParsesCsvAndJson) {
  auto a = parse_matrix(kData / "matrix_a.csv");
  auto j = parse_matrix(kData / "matrix_a.json");
  EXPECT_EQ(a.matrix(), j.matrix());
  EXPECT_EQ(a.matrix()(0, 1), 0.5);
  auto c = parse_matrix_text(" 1 , 0\n0,2 \n\n", MatrixFormat::Csv);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.matrix()(1, 1), 2.0);
}

TEST(MatrixIo, Errors) {
  EXPECT_THROW(parse_matrix_text("1,2\n3,4", MatrixFormat::Csv), NotSymmetric);
  EXPECT_THROW(parse_matrix(kData / "not_symmetric.csv"), NotSymmetric);
  EXPECT_THROW(parse_matrix_text("1,2,3\n4,5,6", MatrixFormat::Csv), NotSquare);
  EXPECT_THROW(parse_matrix_text("1,2\n3", MatrixFormat::Csv), InvalidArgument);
  EXPECT_THROW(parse_matrix_text("", MatrixFormat::Csv), InvalidArgument);
  try {
    parse_matrix_text("1,0\n0,x", MatrixFormat::Csv);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_matrix_text("{\"matrix\": [[1, 0], [0]]}", MatrixFormat::Json), InvalidArgument);
  EXPECT_THROW(parse_matrix_text("{not json", MatrixFormat::Json), ParseError);
  EXPECT_THROW(parse_matrix(kData / "missing.csv"), InvalidArgument);
}

TEST_F(CliTest, RunWritesJsonAndCsv) {
  std::ostringstream err;
  ASSERT_EQ(run_command(spec("matrix_a.csv", 1.0), err), kExitOk) << err.str();
  auto doc = nlohmann::json::parse(slurp(dir_ / "out.json"));
  EXPECT_NEAR(doc["success_probability"].get<double>(), 0.8, 1e-9);
  EXPECT_EQ(doc["kept_count"].get<int>(), 1);
  EXPECT_EQ(doc["qubits"].get<int>(), 7);
  EXPECT_EQ(doc["gate_counts"]["proposed"].get<int>(), 78);
  EXPECT_EQ(doc["gate_counts"]["baseline"].get<int>(), 216);
  for (double a : doc["output_amplitudes"]) EXPECT_NEAR(a, 0.5, 1e-9);
  EXPECT_EQ(slurp(dir_ / "out.csv"), "basis_index,probability\n0,0.25\n1,0.25\n2,0.25\n3,0.25\n");
}

TEST_F(CliTest, JsonRoundTripIsExact) {
  std::ostringstream err;
  ASSERT_EQ(run_command(spec("matrix_c.csv", 1.8), err), kExitOk);
  const std::string text = slurp(dir_ / "out.json");
  auto doc = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(doc.dump(2) + "\n", text);
  for (double a : doc["output_amplitudes"]) EXPECT_EQ(round_sig10(a), a);
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  for (auto mode : {pca::Mode::Exact, pca::Mode::Sampled}) {
    auto s = spec("matrix_c.csv", 1.8);
    s.mode = mode;
    s.seed = 11;
    std::ostringstream err;
    ASSERT_EQ(run_command(s, err), kExitOk);
    const std::string first = slurp(s.out_path);
    ASSERT_EQ(run_command(s, err), kExitOk);
    EXPECT_EQ(slurp(s.out_path), first);
  }
}

TEST_F(CliTest, SampledRun) {
  auto s = spec("matrix_c.csv", 1.8);
  s.mode = pca::Mode::Sampled;
  s.seed = 7;
  s.csv_path = dir_ / "probs.csv";
  std::ostringstream err;
  ASSERT_EQ(run_command(s, err), kExitOk);
  auto doc = nlohmann::json::parse(slurp(s.out_path));
  EXPECT_EQ(doc["mode"], "sampled");
  EXPECT_EQ(doc["shots"].get<int>(), 8192);
  EXPECT_EQ(doc["seed"].get<int>(), 7);
  EXPECT_NEAR(doc["output_amplitudes"][10].get<double>(), 0.5547, 0.03);
  EXPECT_NEAR(doc["output_amplitudes"][15].get<double>(), 0.8321, 0.03);
  EXPECT_TRUE(fs::exists(dir_ / "probs.csv"));
}

TEST_F(CliTest, ExitCodes) {
  std::ostringstream err;
  EXPECT_EQ(run_command(spec("matrix_c.csv", 5.0), err), kExitFiltered);
  EXPECT_NE(err.str().find("all components filtered"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "out.json"));

  err.str("");
  EXPECT_EQ(run_command(spec("not_symmetric.csv", 1.0), err), kExitValidation);
  const std::string msg = err.str();
  EXPECT_EQ(msg.rfind("error: ", 0), 0u);
  EXPECT_EQ(std::count(msg.begin(), msg.end(), '\n'), 1);

  EXPECT_EQ(run_command(spec("matrix_a.csv", 0.0), err), kExitValidation);
  auto bad_bits = spec("matrix_a.csv", 1.0);
  bad_bits.eig_bits = 0;
  EXPECT_EQ(run_command(bad_bits, err), kExitValidation);
}

TEST_F(CliTest, Analyze) {
  EXPECT_EQ(analyze_csv(2, 2), "n,proposed_total,baseline_total,ratio\n2,78,216,0.3611\n");
  std::ostringstream err;
  ASSERT_EQ(analyze_command({.n_min = 1, .n_max = 4, .out_path = dir_ / "a.csv"}, err), kExitOk);
  std::istringstream rows(slurp(dir_ / "a.csv"));
  std::string line;
  std::getline(rows, line);
  double prev = 0;
  int count = 0;
  while (std::getline(rows, line)) {
    const double ratio = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_GT(ratio, prev);
    prev = ratio;
    ++count;
  }
  EXPECT_EQ(count, 4);
  EXPECT_EQ(analyze_command({.n_min = 3, .n_max = 2, .out_path = dir_ / "b.csv"}, err), kExitValidation);
}
