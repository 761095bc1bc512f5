// SPDX-License-Identifier: Apache-2.0
#include "hcos/oracle.hpp"

#include <cmath>
#include <string>

#include "hcos/error.hpp"
#include "hcos/numeric.hpp"

namespace hcos {

double sqrt_one_minus_square(double x) noexcept {
  return std::sqrt(std::max(0.0, 1.0 - x * x));
}

void require_same_dim(const NormalizedVector& v, const NormalizedVector& w) {
  if (v.dim() != w.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "dimension mismatch: " + std::to_string(v.dim()) +
                                                   " vs " + std::to_string(w.dim()));
  }
}

double cosine_similarity_classical(const NormalizedVector& v, const NormalizedVector& w) {
  require_same_dim(v, w);
  KahanSum sum;
  for (std::size_t i = 0; i < v.dim(); ++i) sum.add(v[i] * w[i]);
  return sum.value();
}

double analytic_overlap(double x, double y) {
  x = clamp_unit_interval(x);
  y = clamp_unit_interval(y);
  return x * y + sqrt_one_minus_square(x) * sqrt_one_minus_square(y);
}

BiasReport closed_form_bias(const NormalizedVector& v, const NormalizedVector& w) {
  require_same_dim(v, w);
  BiasReport report;
  report.sqrt_products.reserve(v.dim());
  report.residuals.reserve(v.dim());
  KahanSum sum;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double p = sqrt_one_minus_square(v[i]) * sqrt_one_minus_square(w[i]);
    report.sqrt_products.push_back(p);
    report.residuals.push_back(approx_residual(v[i], w[i]));
    sum.add(p);
  }
  report.bias = sum.value() - static_cast<double>(v.dim()) + 1.0;
  return report;
}

double approx_residual(double x, double y) {
  x = clamp_unit_interval(x);
  y = clamp_unit_interval(y);
  return sqrt_one_minus_square(x) * sqrt_one_minus_square(y) - (1.0 - (x * x + y * y) / 2.0);
}

}  // namespace hcos
