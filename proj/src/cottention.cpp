// SPDX-License-Identifier: Apache-2.0
#include "hcos/cottention.hpp"

#include <cmath>
#include <string>

#include "hcos/error.hpp"
#include "hcos/numeric.hpp"
#include "hcos/oracle.hpp"
#include "hcos/random.hpp"
#include "hcos/text_io.hpp"

namespace hcos {
namespace {

std::vector<NormalizedVector> normalize_rows(const Matrix& m, const char* which) {
  std::vector<NormalizedVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    try {
      rows.push_back(normalize(m.row(r), NormPolicy::auto_normalize));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(which) + " row " + std::to_string(r) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorCode::dimension_mismatch, "row " + std::to_string(r) + " has " +
                                                     std::to_string(rows[r].size()) +
                                                     " columns, expected " +
                                                     std::to_string(m.cols()));
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

SimilarityMatrixReport similarity_matrix(const AttentionInput& input,
                                         const EstimatorConfig& config) {
  const Matrix& q = input.queries;
  const Matrix& k = input.keys;
  if (q.rows() == 0 || k.rows() == 0) {
    throw Error(ErrorCode::invalid_argument, "queries and keys need at least one row");
  }
  if (q.cols() != k.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                "query width " + std::to_string(q.cols()) + " != key width " +
                    std::to_string(k.cols()));
  }
  if (q.cols() == 0) {
    throw Error(ErrorCode::invalid_argument, "d_model must be at least 1");
  }
  config.validate();

  const auto queries = normalize_rows(q, "query");
  const auto keys = normalize_rows(k, "key");

  SimilarityMatrixReport report;
  report.quantum = Matrix(q.rows(), k.rows());
  report.classical = Matrix(q.rows(), k.rows());
  report.chunk_runs_per_pair = chunk_plan(q.cols(), config.resolved_budget(q.cols())).chunks.size();

  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < k.rows(); ++j) {
      EstimatorConfig pair_config = config;
      pair_config.root_seed = seed_for(config.root_seed, i * k.rows() + j);
      report.quantum(i, j) = estimate_similarity(queries[i], keys[j], pair_config).value;
      report.classical(i, j) = cosine_similarity_classical(queries[i], keys[j]);
    }
  }
  const MatrixDiff diff = compare_matrices(report.quantum, report.classical);
  report.max_abs_diff = diff.max_abs_diff;
  report.frobenius_diff = diff.frobenius_diff;
  return report;
}

MatrixDiff compare_matrices(const Matrix& quantum, const Matrix& classical) {
  if (quantum.rows() != classical.rows() || quantum.cols() != classical.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix shapes differ");
  }
  MatrixDiff diff;
  KahanSum sum_sq;
  const auto a = quantum.data();
  const auto b = classical.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double delta = a[i] - b[i];
    diff.max_abs_diff = std::max(diff.max_abs_diff, std::abs(delta));
    sum_sq.add(delta * delta);
  }
  diff.frobenius_diff = std::sqrt(sum_sq.value());
  return diff;
}

AttentionInput random_attention_input(std::size_t d_model, std::size_t query_rows,
                                      std::size_t key_rows, std::uint64_t seed) {
  if (d_model == 0 || query_rows == 0 || key_rows == 0) {
    throw Error(ErrorCode::invalid_argument, "attention sizes must be at least 1");
  }
  Xoshiro256StarStar rng(seed);
  AttentionInput input{Matrix(query_rows, d_model), Matrix(key_rows, d_model)};
  for (std::size_t r = 0; r < query_rows; ++r) {
    for (std::size_t c = 0; c < d_model; ++c) input.queries(r, c) = rng.uniform(-1.0, 1.0);
  }
  for (std::size_t r = 0; r < key_rows; ++r) {
    for (std::size_t c = 0; c < d_model; ++c) input.keys(r, c) = rng.uniform(-1.0, 1.0);
  }
  return input;
}

std::string format_matrix_csv(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_diff_json(const SimilarityMatrixReport& report) {
  return JsonObject()
      .number("max_abs_diff", report.max_abs_diff)
      .number("frobenius_diff", report.frobenius_diff)
      .integer("chunk_runs_per_pair", static_cast<long long>(report.chunk_runs_per_pair))
      .dump();
}

}  // namespace hcos
