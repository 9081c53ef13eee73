// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>

#include "qpca/hermitian_input.hpp"

namespace qpca::cli {

enum class MatrixFormat { Csv, Json };

/// CSV: one row per line, comma-separated reals, blank lines ignored.
/// JSON: {"matrix": [[...], ...]}.
/// Throws ParseError (with line and column), NotSquare or NotSymmetric
/// (asymmetry above 1e-9).
pca::HermitianInput parse_matrix_text(std::string_view text, MatrixFormat format);

/// Format from the extension (.json) or, failing that, a leading '{'.
pca::HermitianInput parse_matrix(const std::filesystem::path& path);

}  // namespace qpca::cli
