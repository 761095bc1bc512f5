// SPDX-License-Identifier: Apache-2.0
#pragma once

// Classical ground truth for the elementwise Hadamard-test estimator.
//
// For unit vectors v, w the estimator returns
//   sum_i (v_i w_i + sqrt(1 - v_i^2) sqrt(1 - w_i^2)) - d + 1,
// so its error against v.w is exactly
//   bias = sum_i sqrt(1 - v_i^2) sqrt(1 - w_i^2) - d + 1.
// By Cauchy-Schwarz the sum is at most sqrt(sum(1 - v_i^2)) sqrt(sum(1 - w_i^2))
// = d - 1, hence bias <= 0, with equality iff |v_i| = |w_i| for all i.
// Example: v = (1, 0), w = (0, 1) gives bias = -1. The estimator never
// overshoots the true similarity.

#include <vector>

#include "hcos/core.hpp"

namespace hcos {

struct BiasReport {
  double bias = 0.0;
  /// sqrt(1 - v_i^2) * sqrt(1 - w_i^2) per element.
  std::vector<double> sqrt_products;
  /// approx_residual(v_i, w_i) per element.
  std::vector<double> residuals;
};

/// sqrt(max(0, 1 - x^2)).
double sqrt_one_minus_square(double x) noexcept;

/// sum_i v_i w_i with compensated summation.
double cosine_similarity_classical(const NormalizedVector& v, const NormalizedVector& w);

/// x*y + sqrt(1-x^2) sqrt(1-y^2) = cos(arccos(y) - arccos(x)).
double analytic_overlap(double x, double y);

BiasReport closed_form_bias(const NormalizedVector& v, const NormalizedVector& w);

/// sqrt(1-x^2) sqrt(1-y^2) - (1 - (x^2 + y^2) / 2): error of the first-order
/// expansion of the cross term.
double approx_residual(double x, double y);

/// Throws a dimension_mismatch error when the two dims differ.
void require_same_dim(const NormalizedVector& v, const NormalizedVector& w);

}  // namespace hcos
