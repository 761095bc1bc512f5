// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hcos/error.hpp"
#include "hcos/oracle.hpp"
#include "hcos/random.hpp"
#include "hcos/simulator.hpp"

namespace hcos {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void expect_state(const TwoQubitState& s, std::array<double, 4> expected, double tol) {
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s.amplitudes()[i].real(), expected[i], tol) << "amplitude " << i;
    EXPECT_NEAR(s.amplitudes()[i].imag(), 0.0, tol) << "amplitude " << i;
  }
}

TEST(Hadamard, OnAncilla) {
  const auto s = apply_hadamard(TwoQubitState{}, Qubit::ancilla);
  expect_state(s, {kInvSqrt2, 0.0, kInvSqrt2, 0.0}, 1e-16);
}

TEST(Hadamard, TwiceIsIdentity) {
  auto s = apply_hadamard(TwoQubitState{}, Qubit::ancilla);
  s = apply_hadamard(s, Qubit::ancilla);
  expect_state(s, {1.0, 0.0, 0.0, 0.0}, 1e-15);
}

TEST(Hadamard, OnTarget) {
  const auto s = apply_hadamard(TwoQubitState{}, Qubit::target);
  expect_state(s, {kInvSqrt2, kInvSqrt2, 0.0, 0.0}, 1e-16);
}

TEST(ControlledRy, PiFlipsTargetWhenControlSet) {
  auto s = apply_hadamard(TwoQubitState{}, Qubit::ancilla);
  s = apply_controlled_ry(s, std::numbers::pi, RotationSign::positive);
  expect_state(s, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}, 1e-15);
}

TEST(ControlledRy, ControlZeroLeavesStateAlone) {
  const auto s = apply_controlled_ry(TwoQubitState{}, 1.234, RotationSign::positive);
  expect_state(s, {1.0, 0.0, 0.0, 0.0}, 0.0);
}

TEST(ControlledRy, InversePairIsIdentity) {
  TwoQubitState s({{{0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}}});
  const double theta = 2.1;
  auto t = apply_controlled_ry(s, theta, RotationSign::positive);
  t = apply_controlled_ry(t, theta, RotationSign::negative);
  expect_state(t, {0.5, 0.5, 0.5, 0.5}, 1e-15);
}

TEST(Circuit, EqualAnglesGiveCertainZero) {
  for (double x : {-1.0, -0.3, 0.0, 0.42, 1.0}) {
    const auto theta = encode_angle(x);
    EXPECT_NEAR(run_hadamard_test_circuit(theta, theta), 1.0, 1e-15) << x;
  }
}

TEST(Circuit, OrthogonalEncodingGivesHalf) {
  EXPECT_NEAR(run_hadamard_test_circuit(encode_angle(1.0), encode_angle(0.0)), 0.5, 1e-15);
}

TEST(Circuit, ThreeFourFive) {
  // Re = 0.6*0.8 + 0.8*0.6 = 0.96, p0 = (1 + 0.96) / 2.
  EXPECT_NEAR(run_hadamard_test_circuit(encode_angle(0.6), encode_angle(0.8)), 0.98, 1e-15);
}

TEST(Circuit, NormPreservedAfterEveryGate) {
  Xoshiro256StarStar rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double tv = encode_angle(rng.uniform(-1, 1)).radians();
    const double tw = encode_angle(rng.uniform(-1, 1)).radians();
    TwoQubitState s;
    s = apply_hadamard(s, Qubit::ancilla);
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    s = apply_controlled_ry(s, tw, RotationSign::positive);
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    s = apply_controlled_ry(s, tv, RotationSign::negative);
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    s = apply_hadamard(s, Qubit::ancilla);
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(Circuit, InverseCircuitReturnsToGround) {
  Xoshiro256StarStar rng(6);
  for (int i = 0; i < 1000; ++i) {
    const auto tv = encode_angle(rng.uniform(-1, 1));
    const auto tw = encode_angle(rng.uniform(-1, 1));
    auto s = hadamard_test_state(tv, tw);
    s = apply_hadamard(s, Qubit::ancilla);
    s = apply_controlled_ry(s, tv.radians(), RotationSign::positive);
    s = apply_controlled_ry(s, tw.radians(), RotationSign::negative);
    s = apply_hadamard(s, Qubit::ancilla);
    for (int k = 0; k < 4; ++k) {
      ASSERT_NEAR(std::abs(s.amplitudes()[k] - std::complex<double>(k == 0 ? 1.0 : 0.0)), 0.0,
                  1e-12);
    }
  }
}

TEST(Circuit, MatchesAnalyticOverlap) {
  Xoshiro256StarStar rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-1, 1);
    const double y = rng.uniform(-1, 1);
    const double p0 = run_hadamard_test_circuit(encode_angle(x), encode_angle(y));
    ASSERT_NEAR(2.0 * p0 - 1.0, analytic_overlap(x, y), 1e-10) << x << ", " << y;
  }
}

TEST(Circuit, TraceFormat) {
  const auto trace = circuit_trace(encode_angle(1.0), encode_angle(0.0));
  EXPECT_EQ(trace,
            "H ancilla 0\n"
            "CRY target 3.1415926535897931\n"
            "CRY target -0\n"
            "H ancilla 0\n"
            "MEASURE ancilla 0\n");
}

TEST(Shots, CertainOutcomes) {
  EXPECT_EQ(sample_shots(1.0, 100, 1).zeros, 100u);
  EXPECT_EQ(sample_shots(0.0, 100, 1).zeros, 0u);
}

TEST(Shots, FairCoinConcentrates) {
  const auto outcome = sample_shots(0.5, 1'000'000, 99);
  EXPECT_EQ(outcome.shots, 1'000'000u);
  EXPECT_GE(outcome.zero_fraction(), 0.498);
  EXPECT_LE(outcome.zero_fraction(), 0.502);
}

TEST(Shots, Deterministic) {
  const auto a = sample_shots(0.3, 5000, 42);
  const auto b = sample_shots(0.3, 5000, 42);
  EXPECT_EQ(a.zeros, b.zeros);
  EXPECT_NE(sample_shots(0.3, 5000, 43).zeros, a.zeros);
}

TEST(Shots, Errors) {
  EXPECT_THROW(sample_shots(1.5, 10, 0), Error);
  EXPECT_THROW(sample_shots(-0.01, 10, 0), Error);
  EXPECT_THROW(sample_shots(0.5, 0, 0), Error);
  EXPECT_EQ(sample_shots(1.0 + 5e-13, 10, 0).zeros, 10u);
}

}  // namespace
}  // namespace hcos
