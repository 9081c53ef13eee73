// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qpca {

/// Root of every exception thrown by the library. `kind()` is a stable,
/// machine-readable tag used by the CLI for its error prefix.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Precondition failures: bad indices, non-unitary matrices, bad widths.
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-argument"; }
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
  const char* kind() const noexcept override { return "dimension-mismatch"; }
};

class NotSquare : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
  const char* kind() const noexcept override { return "not-square"; }
};

class NotSymmetric : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
  const char* kind() const noexcept override { return "not-symmetric"; }
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidArgument(what + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Newton reciprocal called with lambda == 0; the filter routes zero to y = 0.
class ZeroEigenvalue : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
  const char* kind() const noexcept override { return "zero-eigenvalue"; }
};

/// Post-selection on an outcome whose probability is below 1e-12.
class ZeroProbabilityOutcome : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "zero-probability-outcome"; }
};

/// No eigenvalue exceeds the threshold.
class AllComponentsFiltered : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "all-components-filtered"; }
};

/// A numerical invariant the simulator relies on did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invariant-violation"; }
};

}  // namespace qpca
