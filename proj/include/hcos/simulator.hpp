// SPDX-License-Identifier: Apache-2.0
#pragma once

// Two-qubit state-vector simulation of one elementwise Hadamard test.
//
// Register layout: basis index = 2 * ancilla + target, i.e. amplitudes are
// stored in the order |00>, |01>, |10>, |11> with the ancilla as the high bit.
// Circuit for a pair (theta_v, theta_w):
//
//   ancilla: |0> -- H --o-----------o------------ H -- measure
//                       |           |
//   target:  |0> ---- Ry(theta_w) - Ry(-theta_v) -----
//
// The controlled block is U = Ry(theta_v)^dagger Ry(theta_w), and the ancilla
// reads 0 with probability (1 + Re<0|U|0>) / 2.

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "hcos/core.hpp"

namespace hcos {

enum class Qubit { ancilla, target };
enum class RotationSign : int { positive = 1, negative = -1 };

class TwoQubitState {
 public:
  using Amplitude = std::complex<double>;

  /// |00>.
  TwoQubitState() noexcept : amps_{Amplitude{1.0}, {}, {}, {}} {}
  explicit TwoQubitState(const std::array<Amplitude, 4>& amps) noexcept : amps_(amps) {}

  const Amplitude& amplitude(int ancilla, int target) const noexcept {
    return amps_[2 * ancilla + target];
  }
  Amplitude& amplitude(int ancilla, int target) noexcept { return amps_[2 * ancilla + target]; }
  const std::array<Amplitude, 4>& amplitudes() const noexcept { return amps_; }

  double norm_squared() const noexcept;

  /// Probability that measuring the ancilla yields 0.
  double ancilla_zero_probability() const noexcept;

 private:
  std::array<Amplitude, 4> amps_;
};

TwoQubitState apply_hadamard(TwoQubitState state, Qubit qubit) noexcept;

/// Ry(sign * theta) on the target, conditioned on the ancilla being |1>.
TwoQubitState apply_controlled_ry(TwoQubitState state, double theta, RotationSign sign) noexcept;

/// Runs H, CRy(theta_w), CRy(-theta_v), H from |00> and returns the state
/// right before measurement.
TwoQubitState hadamard_test_state(EncodingAngle theta_v, EncodingAngle theta_w) noexcept;

/// Ancilla-0 probability p0 of the Hadamard test circuit.
double run_hadamard_test_circuit(EncodingAngle theta_v, EncodingAngle theta_w) noexcept;

/// Text dump of the circuit, one `GATE qubit angle` line per gate in
/// application order. Angles are signed radians with 17 significant digits.
std::string circuit_trace(EncodingAngle theta_v, EncodingAngle theta_w);

struct ShotOutcome {
  std::uint64_t zeros = 0;
  std::uint64_t shots = 0;

  double zero_fraction() const noexcept {
    return static_cast<double>(zeros) / static_cast<double>(shots);
  }
};

/// Draws `shots` Bernoulli(p0) ancilla readouts from a xoshiro256** stream
/// seeded with `stream_seed`. Pure function of its arguments.
ShotOutcome sample_shots(double p0, std::uint64_t shots, std::uint64_t stream_seed);

}  // namespace hcos
