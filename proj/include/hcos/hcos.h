/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HCOS_HCOS_H
#define HCOS_HCOS_H

/*
 * C interface to the hcos library: cosine-similarity estimation with the
 * angle-encoding, elementwise Hadamard test.
 *
 * Conventions
 *  - Every fallible call returns hcos_status; HCOS_OK is zero. On failure the
 *    calling thread's hcos_last_error() holds a description.
 *  - Objects are opaque handles created by *_create / *_run and released by the
 *    matching *_destroy. Destroying NULL is a no-op.
 *  - Strings are returned through (buf, cap, needed): the library writes at
 *    most cap bytes including the terminating NUL and always stores the full
 *    required size (including NUL) in *needed when needed is non-NULL. If cap
 *    is too small the call returns HCOS_ERR_BUFFER_TOO_SMALL and writes nothing.
 *  - All functions are thread-safe for distinct handles; handles are immutable
 *    after creation except hcos_config, which must not be mutated concurrently.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HCOS_BUILDING_LIBRARY)
#    define HCOS_API __declspec(dllexport)
#  else
#    define HCOS_API __declspec(dllimport)
#  endif
#else
#  define HCOS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcos_status {
  HCOS_OK = 0,
  HCOS_ERR_INVALID_ARGUMENT = 1,
  HCOS_ERR_DOMAIN = 2,
  HCOS_ERR_DIMENSION_MISMATCH = 3,
  HCOS_ERR_DEGENERATE = 4,
  HCOS_ERR_PARSE = 5,
  HCOS_ERR_CONFIG = 6,
  HCOS_ERR_IO = 7,
  HCOS_ERR_BUFFER_TOO_SMALL = 8,
  HCOS_ERR_INTERNAL = 9
} hcos_status;

typedef enum hcos_norm_policy {
  HCOS_NORM_AUTO = 0,
  HCOS_NORM_REJECT = 1
} hcos_norm_policy;

HCOS_API const char* hcos_version(void);
HCOS_API const char* hcos_status_string(hcos_status status);
/* Message of the last failure on this thread; "" if none. */
HCOS_API const char* hcos_last_error(void);

/* ---- normalized vectors ------------------------------------------------ */

typedef struct hcos_vector hcos_vector;

HCOS_API hcos_status hcos_vector_create(const double* data, size_t n, hcos_norm_policy policy,
                                        hcos_vector** out);
/* Comma- and/or newline-separated values; `origin` labels parse errors. */
HCOS_API hcos_status hcos_vector_parse(const char* text, const char* origin,
                                       hcos_norm_policy policy, hcos_vector** out);
HCOS_API size_t hcos_vector_dim(const hcos_vector* v);
/* Copies min(cap, dim) entries. */
HCOS_API hcos_status hcos_vector_entries(const hcos_vector* v, double* out, size_t cap);
HCOS_API void hcos_vector_destroy(hcos_vector* v);

/* ---- angle encoding and single-element circuit -------------------------- */

HCOS_API hcos_status hcos_encode_angle(double x, double* theta);
HCOS_API hcos_status hcos_decode_angle(double theta, double* x);
/* Ancilla-0 probability of the Hadamard test for angles (theta_v, theta_w). */
HCOS_API hcos_status hcos_hadamard_test_p0(double theta_v, double theta_w, double* p0);
HCOS_API hcos_status hcos_sample_shots(double p0, uint64_t shots, uint64_t stream_seed,
                                       uint64_t* zeros);
/* `GATE qubit angle` lines in application order. */
HCOS_API hcos_status hcos_circuit_trace(double theta_v, double theta_w, char* buf, size_t cap,
                                        size_t* needed);

/* ---- classical oracle --------------------------------------------------- */

HCOS_API hcos_status hcos_analytic_overlap(double x, double y, double* out);
HCOS_API hcos_status hcos_approx_residual(double x, double y, double* out);
HCOS_API hcos_status hcos_cosine_similarity(const hcos_vector* v, const hcos_vector* w,
                                            double* out);
HCOS_API hcos_status hcos_closed_form_bias(const hcos_vector* v, const hcos_vector* w,
                                           double* out);

/* ---- estimator configuration ------------------------------------------- */

typedef struct hcos_config hcos_config;

/* Exact mode, budget 2d, root seed 0. */
HCOS_API hcos_status hcos_config_create(hcos_config** out);
/* shots == 0 selects exact mode. */
HCOS_API hcos_status hcos_config_set_shots(hcos_config* cfg, uint64_t shots);
/* budget == 0 selects 2d; otherwise must be even and >= 2. */
HCOS_API hcos_status hcos_config_set_budget(hcos_config* cfg, uint32_t budget);
HCOS_API hcos_status hcos_config_set_seed(hcos_config* cfg, uint64_t seed);
HCOS_API void hcos_config_destroy(hcos_config* cfg);

HCOS_API hcos_status hcos_chunk_count(size_t d, uint32_t budget, size_t* out);
/* {"circuits","depth_class","post_processing","qubits"} */
HCOS_API hcos_status hcos_resource_report_json(size_t d, char* buf, size_t cap, size_t* needed);

/* ---- similarity estimate ----------------------------------------------- */

typedef struct hcos_estimate hcos_estimate;

HCOS_API hcos_status hcos_estimate_similarity(const hcos_vector* v, const hcos_vector* w,
                                              const hcos_config* cfg, hcos_estimate** out);
HCOS_API double hcos_estimate_value(const hcos_estimate* e);
HCOS_API double hcos_estimate_true_similarity(const hcos_estimate* e);
HCOS_API double hcos_estimate_bias(const hcos_estimate* e);
HCOS_API size_t hcos_estimate_chunk_count(const hcos_estimate* e);
HCOS_API size_t hcos_estimate_dim(const hcos_estimate* e);
HCOS_API hcos_status hcos_estimate_overlaps(const hcos_estimate* e, double* out, size_t cap);
HCOS_API hcos_status hcos_estimate_json(const hcos_estimate* e, char* buf, size_t cap,
                                        size_t* needed);
HCOS_API void hcos_estimate_destroy(hcos_estimate* e);

/* ---- random-vector sweep ------------------------------------------------ */

typedef struct hcos_sweep hcos_sweep;

typedef struct hcos_sweep_row {
  size_t d;
  size_t qubits;
  double rmse;
  double pearson;      /* NaN when undefined */
  int pearson_defined; /* 0 when either series has zero variance */
  size_t samples;
} hcos_sweep_row;

HCOS_API hcos_status hcos_sweep_run(const size_t* dims, size_t n_dims, size_t samples,
                                    uint64_t base_seed, int force_equal, const hcos_config* cfg,
                                    hcos_sweep** out);
HCOS_API size_t hcos_sweep_row_count(const hcos_sweep* s);
HCOS_API hcos_status hcos_sweep_row_at(const hcos_sweep* s, size_t i, hcos_sweep_row* out);
/* Header d,qubits,rmse,pearson,samples. */
HCOS_API hcos_status hcos_sweep_write_table(const hcos_sweep* s, const char* path);
/* Header seed,d,true_similarity,estimate,error; records of dimension d only. */
HCOS_API hcos_status hcos_sweep_write_scatter(const hcos_sweep* s, size_t d, const char* path);
HCOS_API hcos_status hcos_sweep_summary_text(const hcos_sweep* s, char* buf, size_t cap,
                                             size_t* needed);
HCOS_API void hcos_sweep_destroy(hcos_sweep* s);

/* ---- cosine attention scores ------------------------------------------- */

typedef struct hcos_attention hcos_attention;

/* queries: query_rows x d_model, keys: key_rows x d_model, both row-major. */
HCOS_API hcos_status hcos_attention_run(const double* queries, size_t query_rows,
                                        const double* keys, size_t key_rows, size_t d_model,
                                        const hcos_config* cfg, hcos_attention** out);
/* Queries and keys drawn uniformly from [-1, 1) with `seed`. */
HCOS_API hcos_status hcos_attention_run_random(size_t d_model, size_t seq_len, uint64_t seed,
                                               const hcos_config* cfg, hcos_attention** out);
HCOS_API size_t hcos_attention_rows(const hcos_attention* a);
HCOS_API size_t hcos_attention_cols(const hcos_attention* a);
HCOS_API double hcos_attention_quantum_at(const hcos_attention* a, size_t i, size_t j);
HCOS_API double hcos_attention_classical_at(const hcos_attention* a, size_t i, size_t j);
HCOS_API double hcos_attention_max_abs_diff(const hcos_attention* a);
HCOS_API double hcos_attention_frobenius_diff(const hcos_attention* a);
HCOS_API size_t hcos_attention_chunk_runs_per_pair(const hcos_attention* a);
HCOS_API hcos_status hcos_attention_write_quantum(const hcos_attention* a, const char* path);
HCOS_API hcos_status hcos_attention_write_classical(const hcos_attention* a, const char* path);
/* {"chunk_runs_per_pair","frobenius_diff","max_abs_diff"} */
HCOS_API hcos_status hcos_attention_diff_json(const hcos_attention* a, char* buf, size_t cap,
                                              size_t* needed);
HCOS_API void hcos_attention_destroy(hcos_attention* a);

/* ---- text helpers ------------------------------------------------------- */

/* Reads a row-per-line CSV matrix; on success *out is malloc'd (free with
 * hcos_free) and holds rows*cols doubles. */
HCOS_API hcos_status hcos_read_matrix_file(const char* path, double** out, size_t* rows,
                                           size_t* cols);
HCOS_API hcos_status hcos_read_text_file(const char* path, char** out);
HCOS_API void hcos_free(void* p);

#ifdef __cplusplus
}
#endif

#endif /* HCOS_HCOS_H */
