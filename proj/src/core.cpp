// SPDX-License-Identifier: Apache-2.0
#include "hcos/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hcos/error.hpp"

namespace hcos {
namespace {

// A vector this close to unit norm is left unscaled; division by the norm
// leaves rounding residue far below this, so a second pass is a no-op.
constexpr double kAlreadyUnit = 1e-10;

}  // namespace

NormalizedVector normalize(std::span<const double> raw, NormPolicy policy) {
  if (raw.empty()) {
    throw Error(ErrorCode::invalid_argument, "vector must have at least one entry");
  }
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "non-finite entry at index " + std::to_string(i));
    }
    sum_sq += raw[i] * raw[i];
  }
  const double norm = std::sqrt(sum_sq);
  if (norm == 0.0) {
    throw Error(ErrorCode::degenerate, "degenerate vector");
  }

  std::vector<double> out(raw.begin(), raw.end());
  const double deviation = std::abs(norm - 1.0);
  if (policy == NormPolicy::reject) {
    if (deviation > kNormTolerance) {
      throw Error(ErrorCode::invalid_argument,
                  "vector is not unit norm (norm = " + std::to_string(norm) + ")");
    }
  } else if (deviation > kAlreadyUnit) {
    for (double& x : out) x /= norm;
  }
  for (double& x : out) x = std::clamp(x, -1.0, 1.0);
  return NormalizedVector(std::move(out));
}

EncodingAngle EncodingAngle::from_radians(double theta) {
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
    throw Error(ErrorCode::domain, "encoding angle outside [0, 2pi]: " + std::to_string(theta));
  }
  return EncodingAngle(theta);
}

double clamp_unit_interval(double x) {
  if (!(x >= -1.0 - kBoundaryClamp && x <= 1.0 + kBoundaryClamp)) {
    throw Error(ErrorCode::domain, "value outside [-1, 1]: " + std::to_string(x));
  }
  return std::clamp(x, -1.0, 1.0);
}

EncodingAngle encode_angle(double x) {
  return EncodingAngle(2.0 * std::acos(clamp_unit_interval(x)));
}

double decode_angle(EncodingAngle theta) noexcept {
  return std::cos(theta.radians() / 2.0);
}

}  // namespace hcos
