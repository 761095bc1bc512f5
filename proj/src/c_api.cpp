// SPDX-License-Identifier: Apache-2.0
#include "hcos/hcos.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "hcos/core.hpp"
#include "hcos/cottention.hpp"
#include "hcos/error.hpp"
#include "hcos/estimator.hpp"
#include "hcos/experiments.hpp"
#include "hcos/oracle.hpp"
#include "hcos/simulator.hpp"
#include "hcos/text_io.hpp"

struct hcos_vector {
  hcos::NormalizedVector value;
};

struct hcos_config {
  hcos::EstimatorConfig value;
};

struct hcos_estimate {
  hcos::SimilarityEstimate value;
  double true_similarity;
};

struct hcos_sweep {
  hcos::SweepResult value;
};

struct hcos_attention {
  hcos::SimilarityMatrixReport value;
};

namespace {

thread_local std::string g_last_error;

hcos_status to_status(hcos::ErrorCode code) {
  switch (code) {
    case hcos::ErrorCode::invalid_argument: return HCOS_ERR_INVALID_ARGUMENT;
    case hcos::ErrorCode::domain: return HCOS_ERR_DOMAIN;
    case hcos::ErrorCode::dimension_mismatch: return HCOS_ERR_DIMENSION_MISMATCH;
    case hcos::ErrorCode::degenerate: return HCOS_ERR_DEGENERATE;
    case hcos::ErrorCode::parse: return HCOS_ERR_PARSE;
    case hcos::ErrorCode::config: return HCOS_ERR_CONFIG;
    case hcos::ErrorCode::io: return HCOS_ERR_IO;
  }
  return HCOS_ERR_INTERNAL;
}

hcos_status fail(hcos_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
hcos_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    fn();
    return HCOS_OK;
  } catch (const hcos::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HCOS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HCOS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HCOS_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw hcos::Error(hcos::ErrorCode::invalid_argument, std::string(name) + " is NULL");
  }
}

hcos::NormPolicy to_policy(hcos_norm_policy p) {
  switch (p) {
    case HCOS_NORM_AUTO: return hcos::NormPolicy::auto_normalize;
    case HCOS_NORM_REJECT: return hcos::NormPolicy::reject;
  }
  throw hcos::Error(hcos::ErrorCode::invalid_argument, "unknown normalization policy");
}

hcos_status copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
  const size_t required = s.size() + 1;
  if (needed) *needed = required;
  if (buf == nullptr || cap < required) {
    return fail(HCOS_ERR_BUFFER_TOO_SMALL,
                "buffer of " + std::to_string(cap) + " bytes, need " + std::to_string(required));
  }
  std::memcpy(buf, s.c_str(), required);
  return HCOS_OK;
}

// guarded() + copy_out() for string-producing calls.
template <typename Fn>
hcos_status string_result(char* buf, size_t cap, size_t* needed, Fn&& produce) noexcept {
  std::string text;
  const hcos_status st = guarded([&] { text = produce(); });
  if (st != HCOS_OK) return st;
  return copy_out(text, buf, cap, needed);
}

const hcos::EstimatorConfig& config_or_default(const hcos_config* cfg) {
  static const hcos::EstimatorConfig exact;
  return cfg ? cfg->value : exact;
}

}  // namespace

extern "C" {

const char* hcos_version(void) { return "1.0.0"; }

const char* hcos_status_string(hcos_status status) {
  switch (status) {
    case HCOS_OK: return "ok";
    case HCOS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HCOS_ERR_DOMAIN: return "domain error";
    case HCOS_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case HCOS_ERR_DEGENERATE: return "degenerate vector";
    case HCOS_ERR_PARSE: return "parse error";
    case HCOS_ERR_CONFIG: return "configuration error";
    case HCOS_ERR_IO: return "I/O error";
    case HCOS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case HCOS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hcos_last_error(void) { return g_last_error.c_str(); }

// ---- vectors

hcos_status hcos_vector_create(const double* data, size_t n, hcos_norm_policy policy,
                               hcos_vector** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n > 0) require(data, "data");
    auto v = hcos::normalize(std::span<const double>(data, n), to_policy(policy));
    *out = new hcos_vector{std::move(v)};
  });
}

hcos_status hcos_vector_parse(const char* text, const char* origin, hcos_norm_policy policy,
                              hcos_vector** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = nullptr;
    const auto raw = hcos::parse_vector_text(text, origin ? origin : "<input>");
    *out = new hcos_vector{hcos::normalize(raw, to_policy(policy))};
  });
}

size_t hcos_vector_dim(const hcos_vector* v) { return v ? v->value.dim() : 0; }

hcos_status hcos_vector_entries(const hcos_vector* v, double* out, size_t cap) {
  return guarded([&] {
    require(v, "v");
    require(out, "out");
    const auto e = v->value.entries();
    std::memcpy(out, e.data(), std::min(cap, e.size()) * sizeof(double));
  });
}

void hcos_vector_destroy(hcos_vector* v) { delete v; }

// ---- encoding / circuit

hcos_status hcos_encode_angle(double x, double* theta) {
  return guarded([&] {
    require(theta, "theta");
    *theta = hcos::encode_angle(x).radians();
  });
}

hcos_status hcos_decode_angle(double theta, double* x) {
  return guarded([&] {
    require(x, "x");
    *x = hcos::decode_angle(hcos::EncodingAngle::from_radians(theta));
  });
}

hcos_status hcos_hadamard_test_p0(double theta_v, double theta_w, double* p0) {
  return guarded([&] {
    require(p0, "p0");
    *p0 = hcos::run_hadamard_test_circuit(hcos::EncodingAngle::from_radians(theta_v),
                                          hcos::EncodingAngle::from_radians(theta_w));
  });
}

hcos_status hcos_sample_shots(double p0, uint64_t shots, uint64_t stream_seed, uint64_t* zeros) {
  return guarded([&] {
    require(zeros, "zeros");
    *zeros = hcos::sample_shots(p0, shots, stream_seed).zeros;
  });
}

hcos_status hcos_circuit_trace(double theta_v, double theta_w, char* buf, size_t cap,
                               size_t* needed) {
  return string_result(buf, cap, needed, [&] {
    return hcos::circuit_trace(hcos::EncodingAngle::from_radians(theta_v),
                               hcos::EncodingAngle::from_radians(theta_w));
  });
}

// ---- oracle

hcos_status hcos_analytic_overlap(double x, double y, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = hcos::analytic_overlap(x, y);
  });
}

hcos_status hcos_approx_residual(double x, double y, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = hcos::approx_residual(x, y);
  });
}

hcos_status hcos_cosine_similarity(const hcos_vector* v, const hcos_vector* w, double* out) {
  return guarded([&] {
    require(v, "v");
    require(w, "w");
    require(out, "out");
    *out = hcos::cosine_similarity_classical(v->value, w->value);
  });
}

hcos_status hcos_closed_form_bias(const hcos_vector* v, const hcos_vector* w, double* out) {
  return guarded([&] {
    require(v, "v");
    require(w, "w");
    require(out, "out");
    *out = hcos::closed_form_bias(v->value, w->value).bias;
  });
}

// ---- config

hcos_status hcos_config_create(hcos_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hcos_config{};
  });
}

hcos_status hcos_config_set_shots(hcos_config* cfg, uint64_t shots) {
  return guarded([&] {
    require(cfg, "cfg");
    if (shots == 0) {
      cfg->value.shots.reset();
    } else {
      cfg->value.shots = shots;
    }
  });
}

hcos_status hcos_config_set_budget(hcos_config* cfg, uint32_t budget) {
  return guarded([&] {
    require(cfg, "cfg");
    if (budget == 0) {
      cfg->value.qubit_budget.reset();
      return;
    }
    hcos::EstimatorConfig candidate = cfg->value;
    candidate.qubit_budget = budget;
    candidate.validate();
    cfg->value = candidate;
  });
}

hcos_status hcos_config_set_seed(hcos_config* cfg, uint64_t seed) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->value.root_seed = seed;
  });
}

void hcos_config_destroy(hcos_config* cfg) { delete cfg; }

hcos_status hcos_chunk_count(size_t d, uint32_t budget, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = hcos::chunk_plan(d, budget).chunks.size();
  });
}

hcos_status hcos_resource_report_json(size_t d, char* buf, size_t cap, size_t* needed) {
  return string_result(buf, cap, needed, [&] { return hcos::to_json(hcos::resource_report(d)); });
}

// ---- estimate

hcos_status hcos_estimate_similarity(const hcos_vector* v, const hcos_vector* w,
                                     const hcos_config* cfg, hcos_estimate** out) {
  return guarded([&] {
    require(out, "out");
    require(v, "v");
    require(w, "w");
    *out = nullptr;
    auto estimate = hcos::estimate_similarity(v->value, w->value, config_or_default(cfg));
    const double truth = hcos::cosine_similarity_classical(v->value, w->value);
    *out = new hcos_estimate{std::move(estimate), truth};
  });
}

double hcos_estimate_value(const hcos_estimate* e) {
  return e ? e->value.value : std::numeric_limits<double>::quiet_NaN();
}

double hcos_estimate_true_similarity(const hcos_estimate* e) {
  return e ? e->true_similarity : std::numeric_limits<double>::quiet_NaN();
}

double hcos_estimate_bias(const hcos_estimate* e) {
  return e ? e->value.bias_closed_form : std::numeric_limits<double>::quiet_NaN();
}

size_t hcos_estimate_chunk_count(const hcos_estimate* e) { return e ? e->value.chunk_count : 0; }

size_t hcos_estimate_dim(const hcos_estimate* e) { return e ? e->value.overlaps.size() : 0; }

hcos_status hcos_estimate_overlaps(const hcos_estimate* e, double* out, size_t cap) {
  return guarded([&] {
    require(e, "e");
    require(out, "out");
    const auto& o = e->value.overlaps;
    std::memcpy(out, o.data(), std::min(cap, o.size()) * sizeof(double));
  });
}

hcos_status hcos_estimate_json(const hcos_estimate* e, char* buf, size_t cap, size_t* needed) {
  return string_result(buf, cap, needed, [&] {
    require(e, "e");
    return hcos::to_json(e->value, e->true_similarity);
  });
}

void hcos_estimate_destroy(hcos_estimate* e) { delete e; }

// ---- sweep

hcos_status hcos_sweep_run(const size_t* dims, size_t n_dims, size_t samples, uint64_t base_seed,
                           int force_equal, const hcos_config* cfg, hcos_sweep** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (n_dims > 0) require(dims, "dims");
    hcos::SweepOptions options;
    options.dims.assign(dims, dims + n_dims);
    options.samples = samples;
    options.base_seed = base_seed;
    options.force_equal = force_equal != 0;
    *out = new hcos_sweep{hcos::run_sweep(options, config_or_default(cfg))};
  });
}

size_t hcos_sweep_row_count(const hcos_sweep* s) { return s ? s->value.summaries.size() : 0; }

hcos_status hcos_sweep_row_at(const hcos_sweep* s, size_t i, hcos_sweep_row* out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    if (i >= s->value.summaries.size()) {
      throw hcos::Error(hcos::ErrorCode::invalid_argument, "row index out of range");
    }
    const auto& row = s->value.summaries[i];
    out->d = row.d;
    out->qubits = row.qubits;
    out->rmse = row.rmse;
    out->pearson_defined = row.pearson.has_value() ? 1 : 0;
    out->pearson = row.pearson.value_or(std::numeric_limits<double>::quiet_NaN());
    out->samples = row.sample_count;
  });
}

hcos_status hcos_sweep_write_table(const hcos_sweep* s, const char* path) {
  return guarded([&] {
    require(s, "s");
    require(path, "path");
    hcos::export_table(s->value.summaries, path);
  });
}

hcos_status hcos_sweep_write_scatter(const hcos_sweep* s, size_t d, const char* path) {
  return guarded([&] {
    require(s, "s");
    require(path, "path");
    hcos::export_scatter(s->value.records_for(d), path);
  });
}

hcos_status hcos_sweep_summary_text(const hcos_sweep* s, char* buf, size_t cap, size_t* needed) {
  return string_result(buf, cap, needed, [&] {
    require(s, "s");
    return hcos::format_summary_text(s->value.summaries);
  });
}

void hcos_sweep_destroy(hcos_sweep* s) { delete s; }

// ---- attention

hcos_status hcos_attention_run(const double* queries, size_t query_rows, const double* keys,
                               size_t key_rows, size_t d_model, const hcos_config* cfg,
                               hcos_attention** out) {
  return guarded([&] {
    require(out, "out");
    require(queries, "queries");
    require(keys, "keys");
    *out = nullptr;
    hcos::AttentionInput input{hcos::Matrix(query_rows, d_model), hcos::Matrix(key_rows, d_model)};
    for (size_t r = 0; r < query_rows; ++r)
      for (size_t c = 0; c < d_model; ++c) input.queries(r, c) = queries[r * d_model + c];
    for (size_t r = 0; r < key_rows; ++r)
      for (size_t c = 0; c < d_model; ++c) input.keys(r, c) = keys[r * d_model + c];
    *out = new hcos_attention{hcos::similarity_matrix(input, config_or_default(cfg))};
  });
}

hcos_status hcos_attention_run_random(size_t d_model, size_t seq_len, uint64_t seed,
                                      const hcos_config* cfg, hcos_attention** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const auto input = hcos::random_attention_input(d_model, seq_len, seq_len, seed);
    *out = new hcos_attention{hcos::similarity_matrix(input, config_or_default(cfg))};
  });
}

size_t hcos_attention_rows(const hcos_attention* a) { return a ? a->value.quantum.rows() : 0; }
size_t hcos_attention_cols(const hcos_attention* a) { return a ? a->value.quantum.cols() : 0; }

double hcos_attention_quantum_at(const hcos_attention* a, size_t i, size_t j) {
  if (!a || i >= a->value.quantum.rows() || j >= a->value.quantum.cols()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return a->value.quantum(i, j);
}

double hcos_attention_classical_at(const hcos_attention* a, size_t i, size_t j) {
  if (!a || i >= a->value.classical.rows() || j >= a->value.classical.cols()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return a->value.classical(i, j);
}

double hcos_attention_max_abs_diff(const hcos_attention* a) {
  return a ? a->value.max_abs_diff : std::numeric_limits<double>::quiet_NaN();
}

double hcos_attention_frobenius_diff(const hcos_attention* a) {
  return a ? a->value.frobenius_diff : std::numeric_limits<double>::quiet_NaN();
}

size_t hcos_attention_chunk_runs_per_pair(const hcos_attention* a) {
  return a ? a->value.chunk_runs_per_pair : 0;
}

hcos_status hcos_attention_write_quantum(const hcos_attention* a, const char* path) {
  return guarded([&] {
    require(a, "a");
    require(path, "path");
    hcos::write_text_file(path, hcos::format_matrix_csv(a->value.quantum));
  });
}

hcos_status hcos_attention_write_classical(const hcos_attention* a, const char* path) {
  return guarded([&] {
    require(a, "a");
    require(path, "path");
    hcos::write_text_file(path, hcos::format_matrix_csv(a->value.classical));
  });
}

hcos_status hcos_attention_diff_json(const hcos_attention* a, char* buf, size_t cap,
                                     size_t* needed) {
  return string_result(buf, cap, needed, [&] {
    require(a, "a");
    return hcos::format_diff_json(a->value);
  });
}

void hcos_attention_destroy(hcos_attention* a) { delete a; }

// ---- text helpers

hcos_status hcos_read_matrix_file(const char* path, double** out, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    require(rows, "rows");
    require(cols, "cols");
    *out = nullptr;
    const auto parsed = hcos::parse_matrix_text(hcos::read_text_file(path), path);
    const size_t r = parsed.size();
    const size_t c = parsed.front().size();
    auto* data = static_cast<double*>(std::malloc(r * c * sizeof(double)));
    if (!data) throw std::bad_alloc();
    for (size_t i = 0; i < r; ++i) std::memcpy(data + i * c, parsed[i].data(), c * sizeof(double));
    *out = data;
    *rows = r;
    *cols = c;
  });
}

hcos_status hcos_read_text_file(const char* path, char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    const std::string text = hcos::read_text_file(path);
    auto* data = static_cast<char*>(std::malloc(text.size() + 1));
    if (!data) throw std::bad_alloc();
    std::memcpy(data, text.c_str(), text.size() + 1);
    *out = data;
  });
}

void hcos_free(void* p) { std::free(p); }

}  // extern "C"
