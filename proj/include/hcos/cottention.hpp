// SPDX-License-Identifier: Apache-2.0
#pragma once

// Cosine-similarity attention scores computed with the elementwise
// Hadamard-test estimator ("quantum cottention"), next to the classical
// scores. Forward pass up to the score matrix only.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcos/estimator.hpp"

namespace hcos {

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Throws on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct AttentionInput {
  Matrix queries;  // L_q x d_model
  Matrix keys;     // L_k x d_model
};

struct MatrixDiff {
  double max_abs_diff = 0.0;
  double frobenius_diff = 0.0;
};

struct SimilarityMatrixReport {
  Matrix quantum;
  Matrix classical;
  double max_abs_diff = 0.0;
  double frobenius_diff = 0.0;
  std::size_t chunk_runs_per_pair = 0;
};

/// Normalizes every query and key row, then fills the L_q x L_k score
/// matrices. In shot mode pair (i, j) uses root seed
/// seed_for(config.root_seed, i * L_k + j).
SimilarityMatrixReport similarity_matrix(const AttentionInput& input,
                                         const EstimatorConfig& config);

MatrixDiff compare_matrices(const Matrix& quantum, const Matrix& classical);

/// Uniform [-1, 1) entries from one xoshiro256** stream: all query rows first,
/// then all key rows, row-major.
AttentionInput random_attention_input(std::size_t d_model, std::size_t query_rows,
                                      std::size_t key_rows, std::uint64_t seed);

/// One row per line, 17 significant digits, no header.
std::string format_matrix_csv(const Matrix& m);

/// {"chunk_runs_per_pair":..,"frobenius_diff":..,"max_abs_diff":..}
std::string format_diff_json(const SimilarityMatrixReport& report);

}  // namespace hcos
