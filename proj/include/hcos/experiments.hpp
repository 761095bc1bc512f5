// SPDX-License-Identifier: Apache-2.0
#pragma once

// Random-vector accuracy study: seeded normalized pairs, estimator error per
// pair, and RMSE / Pearson correlation per dimension.
//
// Seed semantics: one seed yields one (v, w) pair. A xoshiro256** generator
// seeded with that value draws d uniform values in [-1, 1) for v, then d for
// w, and each vector is normalized. A vector whose raw norm is below 1e-6 is
// discarded and redrawn from the same stream.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcos/core.hpp"
#include "hcos/estimator.hpp"

namespace hcos {

struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::size_t d = 0;
  double true_similarity = 0.0;
  double estimate = 0.0;
  double error = 0.0;
};

struct SweepSummary {
  std::size_t d = 0;
  std::size_t qubits = 0;
  double rmse = 0.0;
  /// Empty when either series has zero variance.
  std::optional<double> pearson;
  std::size_t sample_count = 0;
};

struct SweepOptions {
  std::vector<std::size_t> dims{2, 4, 8, 12};
  std::size_t samples = 100;
  std::uint64_t base_seed = 0;
  /// Diagnostic: use w = v for every sample (zero bias).
  bool force_equal = false;
};

struct SweepResult {
  std::vector<SweepSummary> summaries;
  /// Grouped by dimension in `dims` order, seeds ascending within a group.
  std::vector<ExperimentRecord> records;

  std::vector<ExperimentRecord> records_for(std::size_t d) const;
};

std::pair<NormalizedVector, NormalizedVector> generate_pair(std::size_t d, std::uint64_t seed);

/// One record: generates the pair for `seed` and runs the estimator. In shot
/// mode the estimator root seed is seed_for(config.root_seed, seed).
ExperimentRecord run_record(std::size_t d, std::uint64_t seed, const EstimatorConfig& config,
                            bool force_equal = false);

SweepResult run_sweep(const SweepOptions& options, const EstimatorConfig& config);

/// Builds a summary from records that share one dimension.
SweepSummary summarize(std::size_t d, std::span<const ExperimentRecord> records);

std::string format_scatter_csv(std::span<const ExperimentRecord> records);
std::string format_table_csv(std::span<const SweepSummary> summaries);

/// Human-readable aligned table for terminals.
std::string format_summary_text(std::span<const SweepSummary> summaries);

void export_scatter(std::span<const ExperimentRecord> records, const std::filesystem::path& path);
void export_table(std::span<const SweepSummary> summaries, const std::filesystem::path& path);

}  // namespace hcos
