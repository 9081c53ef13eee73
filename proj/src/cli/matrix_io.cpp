// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qpca/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpca/errors.hpp"

namespace qpca::cli {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

double parse_field(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no) {
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  if (begin == end) throw ParseError("empty field", line_no, begin + 1);
  const char* first = line.data() + begin;
  const char* last = line.data() + end;
  if (*first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("not a number: '" + std::string(line.substr(begin, end - begin)) + "'",
                     line_no, begin + 1);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite value", line_no, begin + 1);
  return v;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

std::vector<std::vector<double>> parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
      row.push_back(parse_field(line, start, end, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " values, line " +
                           std::to_string(first_row_line) + " has " + std::to_string(rows.front().size()),
                       line_no, 1);
    }
    if (rows.empty()) first_row_line = line_no;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows", line_no == 0 ? 1 : line_no, 1);
  return rows;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::vector<double>> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError("expected an object with a \"matrix\" array", 1, 1);
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < doc["matrix"].size(); ++r) {
    const auto& jr = doc["matrix"][r];
    if (!jr.is_array()) throw ParseError("matrix row " + std::to_string(r + 1) + " is not an array", 1, 1);
    std::vector<double> row;
    for (std::size_t c = 0; c < jr.size(); ++c) {
      if (!jr[c].is_number()) {
        throw ParseError("matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                             ") is not a number",
                         1, 1);
      }
      row.push_back(jr[c].get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("matrix row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                           " entries, row 1 has " + std::to_string(rows.front().size()),
                       1, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw ParseError("matrix is empty", 1, 1);
  return rows;
}

}  // namespace

pca::HermitianInput parse_matrix_text(std::string_view text, MatrixFormat format) {
  const auto rows = format == MatrixFormat::Json ? parse_json(text) : parse_csv(text);
  if (rows.size() != rows.front().size()) {
    throw NotSquare("matrix is " + std::to_string(rows.size()) + "x" +
                    std::to_string(rows.front().size()) + ", expected square");
  }
  return pca::HermitianInput::from_matrix(to_matrix(rows), 1e-9);
}

pca::HermitianInput parse_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  MatrixFormat format = MatrixFormat::Csv;
  if (path.extension() == ".json") {
    format = MatrixFormat::Json;
  } else if (auto p = text.find_first_not_of(" \t\r\n"); p != std::string::npos && text[p] == '{') {
    format = MatrixFormat::Json;
  }
  return parse_matrix_text(text, format);
}

}  // namespace qpca::cli
