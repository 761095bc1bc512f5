// SPDX-License-Identifier: Apache-2.0
#include "hcos/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hcos/error.hpp"
#include "hcos/random.hpp"
#include "hcos/text_io.hpp"

namespace hcos {

double TwoQubitState::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

double TwoQubitState::ancilla_zero_probability() const noexcept {
  return std::norm(amps_[0]) + std::norm(amps_[1]);
}

TwoQubitState apply_hadamard(TwoQubitState state, Qubit qubit) noexcept {
  constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
  for (int other = 0; other < 2; ++other) {
    auto& a = qubit == Qubit::ancilla ? state.amplitude(0, other) : state.amplitude(other, 0);
    auto& b = qubit == Qubit::ancilla ? state.amplitude(1, other) : state.amplitude(other, 1);
    const auto sum = (a + b) * kInvSqrt2;
    const auto diff = (a - b) * kInvSqrt2;
    a = sum;
    b = diff;
  }
  return state;
}

TwoQubitState apply_controlled_ry(TwoQubitState state, double theta, RotationSign sign) noexcept {
  const double half = static_cast<int>(sign) * theta / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  auto& a0 = state.amplitude(1, 0);
  auto& a1 = state.amplitude(1, 1);
  const auto r0 = c * a0 - s * a1;
  const auto r1 = s * a0 + c * a1;
  a0 = r0;
  a1 = r1;
  return state;
}

TwoQubitState hadamard_test_state(EncodingAngle theta_v, EncodingAngle theta_w) noexcept {
  TwoQubitState state;
  state = apply_hadamard(state, Qubit::ancilla);
  state = apply_controlled_ry(state, theta_w.radians(), RotationSign::positive);
  state = apply_controlled_ry(state, theta_v.radians(), RotationSign::negative);
  state = apply_hadamard(state, Qubit::ancilla);
  return state;
}

double run_hadamard_test_circuit(EncodingAngle theta_v, EncodingAngle theta_w) noexcept {
  return hadamard_test_state(theta_v, theta_w).ancilla_zero_probability();
}

std::string circuit_trace(EncodingAngle theta_v, EncodingAngle theta_w) {
  std::ostringstream out;
  out << "H ancilla 0\n";
  out << "CRY target " << format_double(theta_w.radians()) << '\n';
  out << "CRY target " << format_double(-theta_v.radians()) << '\n';
  out << "H ancilla 0\n";
  out << "MEASURE ancilla 0\n";
  return out.str();
}

ShotOutcome sample_shots(double p0, std::uint64_t shots, std::uint64_t stream_seed) {
  if (shots == 0) {
    throw Error(ErrorCode::config, "shot count must be at least 1");
  }
  if (!(p0 >= -kBoundaryClamp && p0 <= 1.0 + kBoundaryClamp)) {
    throw Error(ErrorCode::domain, "probability outside [0, 1]: " + std::to_string(p0));
  }
  p0 = std::clamp(p0, 0.0, 1.0);

  Xoshiro256StarStar rng(stream_seed);
  ShotOutcome outcome{0, shots};
  for (std::uint64_t i = 0; i < shots; ++i) {
    if (rng.uniform01() < p0) ++outcome.zeros;
  }
  return outcome;
}

}  // namespace hcos
