// Copyright 2026 The qpca-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "qpca/errors.hpp"
#include "qpca/state_vector.hpp"

using namespace qpca;
using namespace qpca::sim;

TEST(StateVector, ZeroAndBasis) {
  auto s = StateVector::zero(3);
  EXPECT_EQ(s.num_qubits(), 3u);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], Complex(1.0));
  auto b = StateVector::basis(2, 3);
  EXPECT_EQ(b[3], Complex(1.0));
  EXPECT_THROW(StateVector::basis(2, 4), InvalidArgument);
  EXPECT_THROW(StateVector::zero(kMaxQubits + 1), InvalidArgument);
}

TEST(StateVector, FromAmplitudesChecksNormAndSize) {
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NO_THROW(StateVector::from_amplitudes({s, s}));
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes({NAN, 0.0}), InvalidArgument);
}

TEST(StateVector, NormalizedRejectsZero) {
  auto s = StateVector::normalized({3.0, 4.0});
  EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_THROW(StateVector::normalized({0.0, 0.0}), InvalidArgument);
}

TEST(Fidelity, Examples) {
  auto a = StateVector::normalized({1.0, 2.0, 3.0, 4.0});
  EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(StateVector::basis(2, 0), StateVector::basis(2, 1)), 0.0, 1e-15);
  EXPECT_THROW(fidelity(StateVector::zero(1), StateVector::zero(2)), DimensionMismatch);
  // global phase does not matter
  auto b = StateVector::normalized({Complex(0, 1), Complex(0, 2), Complex(0, 3), Complex(0, 4)});
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
}
