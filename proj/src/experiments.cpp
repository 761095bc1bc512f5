// SPDX-License-Identifier: Apache-2.0
#include "hcos/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hcos/error.hpp"
#include "hcos/numeric.hpp"
#include "hcos/oracle.hpp"
#include "hcos/random.hpp"
#include "hcos/text_io.hpp"

namespace hcos {
namespace {

constexpr double kMinRawNorm = 1e-6;

NormalizedVector draw_normalized(Xoshiro256StarStar& rng, std::size_t d) {
  std::vector<double> raw(d);
  for (;;) {
    double sum_sq = 0.0;
    for (double& x : raw) {
      x = rng.uniform(-1.0, 1.0);
      sum_sq += x * x;
    }
    if (std::sqrt(sum_sq) >= kMinRawNorm) return normalize(raw, NormPolicy::auto_normalize);
  }
}

}  // namespace

std::vector<ExperimentRecord> SweepResult::records_for(std::size_t d) const {
  std::vector<ExperimentRecord> out;
  for (const auto& r : records) {
    if (r.d == d) out.push_back(r);
  }
  return out;
}

std::pair<NormalizedVector, NormalizedVector> generate_pair(std::size_t d, std::uint64_t seed) {
  if (d == 0) {
    throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  }
  Xoshiro256StarStar rng(seed);
  NormalizedVector v = draw_normalized(rng, d);
  NormalizedVector w = draw_normalized(rng, d);
  return {std::move(v), std::move(w)};
}

ExperimentRecord run_record(std::size_t d, std::uint64_t seed, const EstimatorConfig& config,
                            bool force_equal) {
  auto [v, w] = generate_pair(d, seed);
  if (force_equal) w = v;

  EstimatorConfig record_config = config;
  record_config.root_seed = seed_for(config.root_seed, seed);

  ExperimentRecord record;
  record.seed = seed;
  record.d = d;
  record.true_similarity = cosine_similarity_classical(v, w);
  record.estimate = estimate_similarity(v, w, record_config).value;
  record.error = record.estimate - record.true_similarity;
  return record;
}

SweepSummary summarize(std::size_t d, std::span<const ExperimentRecord> records) {
  std::vector<double> errors, truths, estimates;
  errors.reserve(records.size());
  truths.reserve(records.size());
  estimates.reserve(records.size());
  for (const auto& r : records) {
    errors.push_back(r.error);
    truths.push_back(r.true_similarity);
    estimates.push_back(r.estimate);
  }
  SweepSummary summary;
  summary.d = d;
  summary.qubits = 2 * d;
  summary.rmse = root_mean_square(errors);
  summary.pearson = pearson_correlation(truths, estimates);
  summary.sample_count = records.size();
  return summary;
}

SweepResult run_sweep(const SweepOptions& options, const EstimatorConfig& config) {
  if (options.dims.empty()) {
    throw Error(ErrorCode::invalid_argument, "sweep needs at least one dimension");
  }
  if (options.samples < 2) {
    throw Error(ErrorCode::invalid_argument, "sweep needs at least 2 samples per dimension");
  }
  for (std::size_t d : options.dims) {
    if (d == 0) throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  }
  config.validate();

  SweepResult result;
  result.records.reserve(options.dims.size() * options.samples);
  for (std::size_t d : options.dims) {
    const std::size_t first = result.records.size();
    for (std::size_t s = 0; s < options.samples; ++s) {
      result.records.push_back(run_record(d, options.base_seed + s, config, options.force_equal));
    }
    result.summaries.push_back(
        summarize(d, std::span(result.records).subspan(first, options.samples)));
  }
  return result;
}

std::string format_scatter_csv(std::span<const ExperimentRecord> records) {
  std::string out = "seed,d,true_similarity,estimate,error\n";
  for (const auto& r : records) {
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.d);
    out += ',';
    out += format_double(r.true_similarity);
    out += ',';
    out += format_double(r.estimate);
    out += ',';
    out += format_double(r.error);
    out += '\n';
  }
  return out;
}

std::string format_table_csv(std::span<const SweepSummary> summaries) {
  std::string out = "d,qubits,rmse,pearson,samples\n";
  for (const auto& s : summaries) {
    out += std::to_string(s.d);
    out += ',';
    out += std::to_string(s.qubits);
    out += ',';
    out += format_double(s.rmse);
    out += ',';
    out += s.pearson ? format_double(*s.pearson) : std::string("undefined");
    out += ',';
    out += std::to_string(s.sample_count);
    out += '\n';
  }
  return out;
}

std::string format_summary_text(std::span<const SweepSummary> summaries) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%6s %8s %10s %12s %8s\n", "d", "qubits", "rmse", "pearson",
                "samples");
  out << line;
  for (const auto& s : summaries) {
    char pearson[32];
    if (s.pearson) {
      std::snprintf(pearson, sizeof pearson, "%12.4f", *s.pearson);
    } else {
      std::snprintf(pearson, sizeof pearson, "%12s", "undefined");
    }
    std::snprintf(line, sizeof line, "%6zu %8zu %10.4f %s %8zu\n", s.d, s.qubits, s.rmse, pearson,
                  s.sample_count);
    out << line;
  }
  return out.str();
}

void export_scatter(std::span<const ExperimentRecord> records, const std::filesystem::path& path) {
  if (records.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "no records to export to '" + path.string() + "'");
  }
  write_text_file(path, format_scatter_csv(records));
}

void export_table(std::span<const SweepSummary> summaries, const std::filesystem::path& path) {
  if (summaries.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "no summaries to export to '" + path.string() + "'");
  }
  write_text_file(path, format_table_csv(summaries));
}

}  // namespace hcos
