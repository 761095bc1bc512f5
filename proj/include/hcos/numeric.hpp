// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>

namespace hcos {

/// Kahan-Babuska (Neumaier) compensated accumulator. Terms are consumed in the
/// order given, so the result depends only on that order.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

/// sqrt(sum(e^2) / n). Requires a non-empty input.
double root_mean_square(std::span<const double> errors);

/// Sample Pearson correlation (n - 1 denominators). Returns nullopt when the
/// series are shorter than 2 or either has zero variance.
std::optional<double> pearson_correlation(std::span<const double> xs, std::span<const double> ys);

}  // namespace hcos
