// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hcos {

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kBoundaryClamp = 1e-12;

enum class NormPolicy { auto_normalize, reject };

/// Real vector with unit L2 norm (within kNormTolerance) and every entry in
/// [-1, 1]. Only obtainable through normalize().
class NormalizedVector {
 public:
  std::span<const double> entries() const noexcept { return entries_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const NormalizedVector&, const NormalizedVector&) = default;

 private:
  explicit NormalizedVector(std::vector<double> entries) : entries_(std::move(entries)) {}
  friend NormalizedVector normalize(std::span<const double> raw, NormPolicy policy);

  std::vector<double> entries_;
};

/// Scales `raw` to unit norm and clamps entries to [-1, 1].
///
/// Inputs already within 1e-10 of unit norm are kept as-is (then clamped), which
/// makes the operation idempotent bit-for-bit. Under NormPolicy::reject any
/// input whose norm is off by more than kNormTolerance is refused.
NormalizedVector normalize(std::span<const double> raw, NormPolicy policy);

/// Rotation angle in [0, 2*pi] produced by the angle encoding.
class EncodingAngle {
 public:
  /// Validates theta against [0, 2*pi].
  static EncodingAngle from_radians(double theta);

  double radians() const noexcept { return theta_; }

 private:
  explicit EncodingAngle(double theta) noexcept : theta_(theta) {}
  friend EncodingAngle encode_angle(double x);

  double theta_;
};

/// theta = 2 * arccos(x) on the principal branch, so Ry(theta)|0> carries a
/// non-negative |1> amplitude sqrt(1 - x^2). Values within kBoundaryClamp of
/// +-1 are clamped; anything further out is a domain error.
EncodingAngle encode_angle(double x);

/// cos(theta / 2).
double decode_angle(EncodingAngle theta) noexcept;

/// Clamps x into [-1, 1] when it lies within kBoundaryClamp of the interval,
/// throws a domain error otherwise.
double clamp_unit_interval(double x);

}  // namespace hcos
