// SPDX-License-Identifier: Apache-2.0
#include "hcos/estimator.hpp"

#include <string>

#include "hcos/error.hpp"
#include "hcos/numeric.hpp"
#include "hcos/oracle.hpp"
#include "hcos/random.hpp"
#include "hcos/simulator.hpp"
#include "hcos/text_io.hpp"

namespace hcos {
namespace {

void validate_budget(unsigned budget) {
  if (budget < 2 || budget % 2 != 0) {
    throw Error(ErrorCode::config,
                "qubit budget must be an even integer >= 2, got " + std::to_string(budget));
  }
}

}  // namespace

void EstimatorConfig::validate() const {
  if (shots && *shots == 0) {
    throw Error(ErrorCode::config, "shot count must be at least 1");
  }
  if (qubit_budget) validate_budget(*qubit_budget);
}

unsigned EstimatorConfig::resolved_budget(std::size_t d) const {
  if (qubit_budget) return *qubit_budget;
  return static_cast<unsigned>(2 * d);
}

ChunkPlan chunk_plan(std::size_t d, unsigned qubit_budget) {
  validate_budget(qubit_budget);
  if (d == 0) {
    throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  }
  ChunkPlan plan;
  plan.elements_per_chunk = qubit_budget / 2;
  for (std::size_t begin = 0; begin < d; begin += plan.elements_per_chunk) {
    plan.chunks.push_back({begin, std::min(d, begin + plan.elements_per_chunk)});
  }
  return plan;
}

std::uint64_t element_stream_seed(std::uint64_t root_seed, std::uint64_t element_index) noexcept {
  return seed_for(root_seed, element_index);
}

double elementwise_real_overlap(double v_i, double w_i, const EstimatorConfig& config,
                                std::size_t element_index) {
  const double p0 = run_hadamard_test_circuit(encode_angle(v_i), encode_angle(w_i));
  if (config.is_exact()) return 2.0 * p0 - 1.0;
  const ShotOutcome outcome =
      sample_shots(p0, *config.shots, element_stream_seed(config.root_seed, element_index));
  return 2.0 * outcome.zero_fraction() - 1.0;
}

double combine_overlaps(std::span<const double> overlaps) noexcept {
  return compensated_sum(overlaps) - static_cast<double>(overlaps.size()) + 1.0;
}

SimilarityEstimate estimate_similarity(const NormalizedVector& v, const NormalizedVector& w,
                                       const EstimatorConfig& config) {
  require_same_dim(v, w);
  config.validate();
  const std::size_t d = v.dim();

  SimilarityEstimate estimate;
  estimate.config_used = config;
  estimate.qubit_budget = config.resolved_budget(d);
  const ChunkPlan plan = chunk_plan(d, estimate.qubit_budget);
  estimate.chunk_count = plan.chunks.size();

  // Each chunk is one simulated run of elements_per_chunk parallel two-qubit
  // tests. Overlaps land at their element index, so grouping cannot change
  // the combined value.
  estimate.overlaps.assign(d, 0.0);
  for (const IndexRange& chunk : plan.chunks) {
    for (std::size_t i = chunk.begin; i < chunk.end; ++i) {
      estimate.overlaps[i] = elementwise_real_overlap(v[i], w[i], config, i);
    }
  }
  estimate.value = combine_overlaps(estimate.overlaps);
  estimate.bias_closed_form = closed_form_bias(v, w).bias;
  return estimate;
}

std::string to_json(const SimilarityEstimate& estimate, double true_similarity) {
  JsonObject json;
  json.number("estimate", estimate.value)
      .number("true_similarity", true_similarity)
      .number("bias_closed_form", estimate.bias_closed_form)
      .number_array("overlaps", estimate.overlaps)
      .string("mode", estimate.config_used.is_exact() ? "exact" : "shots")
      .integer("qubit_budget", estimate.qubit_budget)
      .integer("chunk_count", static_cast<long long>(estimate.chunk_count));
  if (estimate.config_used.shots) {
    json.integer("shots", static_cast<long long>(*estimate.config_used.shots));
  } else {
    json.null("shots");
  }
  return json.dump();
}

ResourceReport resource_report(std::size_t d) {
  if (d == 0) {
    throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  }
  return ResourceReport{2 * d, DepthClass::constant, d, true};
}

std::string to_json(const ResourceReport& report) {
  return JsonObject()
      .integer("qubits", static_cast<long long>(report.qubits))
      .string("depth_class", "constant")
      .integer("circuits", static_cast<long long>(report.circuits))
      .string("post_processing", report.post_processing_required ? "required" : "none")
      .dump();
}

}  // namespace hcos
