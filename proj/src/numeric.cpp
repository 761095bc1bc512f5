// SPDX-License-Identifier: Apache-2.0
#include "hcos/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "hcos/error.hpp"

namespace hcos {

double root_mean_square(std::span<const double> errors) {
  if (errors.empty()) {
    throw Error(ErrorCode::invalid_argument, "RMSE of an empty series");
  }
  KahanSum sum;
  for (double e : errors) sum.add(e * e);
  return std::sqrt(sum.value() / static_cast<double>(errors.size()));
}

std::optional<double> pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::dimension_mismatch, "pearson: series lengths differ");
  }
  const std::size_t n = xs.size();
  if (n < 2) return std::nullopt;

  const double mean_x = compensated_sum(xs) / static_cast<double>(n);
  const double mean_y = compensated_sum(ys) / static_cast<double>(n);
  KahanSum sxx, syy, sxy;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx.add(dx * dx);
    syy.add(dy * dy);
    sxy.add(dx * dy);
  }
  const double denom = static_cast<double>(n - 1);
  const double var_x = sxx.value() / denom;
  const double var_y = syy.value() / denom;
  // Series that are constant up to rounding (e.g. all similarities equal to 1
  // within an ulp) count as zero-variance.
  constexpr double kRelativeVarianceFloor = 1e-24;
  const auto degenerate = [&](double var, double mean) {
    return !(var > kRelativeVarianceFloor * std::max(1.0, mean * mean));
  };
  if (degenerate(var_x, mean_x) || degenerate(var_y, mean_y)) return std::nullopt;
  const double r = (sxy.value() / denom) / (std::sqrt(var_x) * std::sqrt(var_y));
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace hcos
