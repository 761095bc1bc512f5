// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcos/core.hpp"

namespace hcos {

/// Execution settings for the elementwise estimator.
///
/// `shots` empty means exact expectations; otherwise each element's ancilla
/// probability is replaced by the zero fraction of `shots` simulated readouts.
/// `qubit_budget` empty means "2d", i.e. every element test in a single run.
struct EstimatorConfig {
  std::optional<std::uint64_t> shots;
  std::optional<unsigned> qubit_budget;
  std::uint64_t root_seed = 0;

  static EstimatorConfig exact() { return {}; }
  static EstimatorConfig with_shots(std::uint64_t n, std::uint64_t seed = 0) {
    return {n, std::nullopt, seed};
  }

  bool is_exact() const noexcept { return !shots.has_value(); }

  /// Throws ErrorCode::config for zero shots or an odd / sub-2 budget.
  void validate() const;

  /// Budget in effect for a d-element estimate.
  unsigned resolved_budget(std::size_t d) const;
};

/// Half-open, zero-based element range.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct ChunkPlan {
  std::vector<IndexRange> chunks;
  std::size_t elements_per_chunk = 0;
};

/// Splits d element tests into sequential runs of budget/2 elements (two
/// qubits per element).
ChunkPlan chunk_plan(std::size_t d, unsigned qubit_budget);

/// Stream seed for the shot sampler of one element.
std::uint64_t element_stream_seed(std::uint64_t root_seed, std::uint64_t element_index) noexcept;

/// Re<0|U_i|0> for one element: 2 p0 - 1 from the simulated circuit, with p0
/// either exact or estimated from shots.
double elementwise_real_overlap(double v_i, double w_i, const EstimatorConfig& config,
                                std::size_t element_index);

struct SimilarityEstimate {
  double value = 0.0;
  std::vector<double> overlaps;
  double bias_closed_form = 0.0;
  EstimatorConfig config_used;
  unsigned qubit_budget = 0;
  std::size_t chunk_count = 0;
};

/// sum(overlaps) - d + 1, summed in element order with compensation.
double combine_overlaps(std::span<const double> overlaps) noexcept;

SimilarityEstimate estimate_similarity(const NormalizedVector& v, const NormalizedVector& w,
                                       const EstimatorConfig& config);

/// Machine-readable estimate: keys bias_closed_form, chunk_count, estimate,
/// mode, overlaps, qubit_budget, shots (null in exact mode), true_similarity.
std::string to_json(const SimilarityEstimate& estimate, double true_similarity);

enum class DepthClass { constant };

struct ResourceReport {
  std::size_t qubits = 0;
  DepthClass depth_class = DepthClass::constant;
  std::size_t circuits = 0;
  bool post_processing_required = true;
};

/// Qubit/depth/circuit counts of the angle-encoding construction for dimension d.
ResourceReport resource_report(std::size_t d);

std::string to_json(const ResourceReport& report);

}  // namespace hcos
