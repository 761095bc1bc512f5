// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared library strictly through include/hcos/hcos.h.
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hcos/hcos.h"

namespace {

struct VectorHandle {
  hcos_vector* p = nullptr;
  VectorHandle() = default;
  VectorHandle(VectorHandle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  VectorHandle(const VectorHandle&) = delete;
  VectorHandle& operator=(const VectorHandle&) = delete;
  ~VectorHandle() { hcos_vector_destroy(p); }
};

VectorHandle make(std::vector<double> raw, hcos_norm_policy policy = HCOS_NORM_AUTO) {
  VectorHandle h;
  EXPECT_EQ(hcos_vector_create(raw.data(), raw.size(), policy, &h.p), HCOS_OK)
      << hcos_last_error();
  return h;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CApi, StatusStringsAndVersion) {
  EXPECT_STREQ(hcos_status_string(HCOS_OK), "ok");
  EXPECT_STREQ(hcos_status_string(HCOS_ERR_DEGENERATE), "degenerate vector");
  EXPECT_STREQ(hcos_version(), "1.0.0");
}

TEST(CApi, VectorLifecycleAndErrors) {
  auto v = make({3, 4});
  ASSERT_EQ(hcos_vector_dim(v.p), 2u);
  double e[2];
  ASSERT_EQ(hcos_vector_entries(v.p, e, 2), HCOS_OK);
  EXPECT_DOUBLE_EQ(e[0], 0.6);
  EXPECT_DOUBLE_EQ(e[1], 0.8);

  hcos_vector* bad = nullptr;
  const double zeros[2] = {0, 0};
  EXPECT_EQ(hcos_vector_create(zeros, 2, HCOS_NORM_AUTO, &bad), HCOS_ERR_DEGENERATE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_STREQ(hcos_last_error(), "degenerate vector");

  const double raw[2] = {3, 4};
  EXPECT_EQ(hcos_vector_create(raw, 2, HCOS_NORM_REJECT, &bad), HCOS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hcos_vector_create(nullptr, 2, HCOS_NORM_AUTO, &bad), HCOS_ERR_INVALID_ARGUMENT);

  EXPECT_EQ(hcos_vector_parse("0.5,x", "cli", HCOS_NORM_AUTO, &bad), HCOS_ERR_PARSE);
  EXPECT_STREQ(hcos_last_error(), "cli:1:5: not a number: 'x'");
  hcos_vector_destroy(nullptr);
}

TEST(CApi, EncodingAndCircuit) {
  double theta = -1;
  ASSERT_EQ(hcos_encode_angle(0.0, &theta), HCOS_OK);
  EXPECT_NEAR(theta, M_PI, 1e-15);
  EXPECT_EQ(hcos_encode_angle(2.0, &theta), HCOS_ERR_DOMAIN);
  double x = 0;
  ASSERT_EQ(hcos_decode_angle(2 * M_PI, &x), HCOS_OK);
  EXPECT_DOUBLE_EQ(x, -1.0);

  double tv = 0, tw = 0, p0 = 0;
  hcos_encode_angle(0.6, &tv);
  hcos_encode_angle(0.8, &tw);
  ASSERT_EQ(hcos_hadamard_test_p0(tv, tw, &p0), HCOS_OK);
  EXPECT_NEAR(p0, 0.98, 1e-15);

  uint64_t zeros = 0;
  ASSERT_EQ(hcos_sample_shots(1.0, 100, 3, &zeros), HCOS_OK);
  EXPECT_EQ(zeros, 100u);
  EXPECT_EQ(hcos_sample_shots(0.5, 0, 3, &zeros), HCOS_ERR_CONFIG);
}

TEST(CApi, StringBufferProtocol) {
  size_t needed = 0;
  EXPECT_EQ(hcos_circuit_trace(0.0, M_PI, nullptr, 0, &needed), HCOS_ERR_BUFFER_TOO_SMALL);
  ASSERT_GT(needed, 1u);
  std::string buf(needed, '\0');
  ASSERT_EQ(hcos_circuit_trace(0.0, M_PI, buf.data(), buf.size(), &needed), HCOS_OK);
  EXPECT_EQ(std::string(buf.c_str()).rfind("H ancilla 0\nCRY target 3.14159", 0), 0u);

  char small[4];
  EXPECT_EQ(hcos_resource_report_json(8, small, sizeof small, &needed), HCOS_ERR_BUFFER_TOO_SMALL);
  std::string json(needed, '\0');
  ASSERT_EQ(hcos_resource_report_json(8, json.data(), json.size(), nullptr), HCOS_OK);
  EXPECT_STREQ(json.c_str(),
               "{\"circuits\":8,\"depth_class\":\"constant\",\"post_processing\":\"required\","
               "\"qubits\":16}\n");
  EXPECT_EQ(hcos_resource_report_json(0, json.data(), json.size(), nullptr),
            HCOS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, OracleCalls) {
  double out = 0;
  ASSERT_EQ(hcos_analytic_overlap(0.6, 0.8, &out), HCOS_OK);
  EXPECT_NEAR(out, 0.96, 1e-15);
  ASSERT_EQ(hcos_approx_residual(1.0, 0.0, &out), HCOS_OK);
  EXPECT_EQ(out, -0.5);
  auto v = make({1, 0});
  auto w = make({0, 1});
  ASSERT_EQ(hcos_cosine_similarity(v.p, w.p, &out), HCOS_OK);
  EXPECT_EQ(out, 0.0);
  ASSERT_EQ(hcos_closed_form_bias(v.p, w.p, &out), HCOS_OK);
  EXPECT_EQ(out, -1.0);
  auto u = make({1, 0, 0});
  EXPECT_EQ(hcos_closed_form_bias(v.p, u.p, &out), HCOS_ERR_DIMENSION_MISMATCH);
}

TEST(CApi, ConfigAndEstimate) {
  hcos_config* cfg = nullptr;
  ASSERT_EQ(hcos_config_create(&cfg), HCOS_OK);
  EXPECT_EQ(hcos_config_set_budget(cfg, 3), HCOS_ERR_CONFIG);
  ASSERT_EQ(hcos_config_set_budget(cfg, 2), HCOS_OK);

  auto v = make({0.6, 0.8});
  auto w = make({0.8, 0.6});
  hcos_estimate* e = nullptr;
  ASSERT_EQ(hcos_estimate_similarity(v.p, w.p, cfg, &e), HCOS_OK);
  EXPECT_NEAR(hcos_estimate_value(e), 0.92, 1e-14);
  EXPECT_NEAR(hcos_estimate_true_similarity(e), 0.96, 1e-15);
  EXPECT_NEAR(hcos_estimate_bias(e), -0.04, 1e-15);
  EXPECT_EQ(hcos_estimate_chunk_count(e), 2u);
  ASSERT_EQ(hcos_estimate_dim(e), 2u);
  double overlaps[2];
  ASSERT_EQ(hcos_estimate_overlaps(e, overlaps, 2), HCOS_OK);
  EXPECT_NEAR(overlaps[0], 0.96, 1e-15);
  hcos_estimate_destroy(e);

  // Shot mode reproduces for a fixed seed.
  ASSERT_EQ(hcos_config_set_shots(cfg, 1000), HCOS_OK);
  ASSERT_EQ(hcos_config_set_seed(cfg, 7), HCOS_OK);
  std::string first, second;
  for (std::string* out : {&first, &second}) {
    ASSERT_EQ(hcos_estimate_similarity(v.p, w.p, cfg, &e), HCOS_OK);
    size_t needed = 0;
    hcos_estimate_json(e, nullptr, 0, &needed);
    out->assign(needed, '\0');
    ASSERT_EQ(hcos_estimate_json(e, out->data(), out->size(), &needed), HCOS_OK);
    hcos_estimate_destroy(e);
  }
  EXPECT_EQ(first, second);
  EXPECT_NE(first.find("\"mode\":\"shots\""), std::string::npos);
  EXPECT_NE(first.find("\"shots\":1000"), std::string::npos);

  auto u = make({1, 0, 0});
  EXPECT_EQ(hcos_estimate_similarity(v.p, u.p, cfg, &e), HCOS_ERR_DIMENSION_MISMATCH);
  EXPECT_EQ(e, nullptr);
  hcos_config_destroy(cfg);

  size_t chunks = 0;
  ASSERT_EQ(hcos_chunk_count(16, 8, &chunks), HCOS_OK);
  EXPECT_EQ(chunks, 4u);
  EXPECT_EQ(hcos_chunk_count(16, 7, &chunks), HCOS_ERR_CONFIG);
}

TEST(CApi, SweepFilesAndRows) {
  const auto dir = std::filesystem::temp_directory_path() / "hcos_capi_sweep";
  std::filesystem::create_directories(dir);
  const size_t dims[] = {2, 4};
  hcos_sweep* s = nullptr;
  ASSERT_EQ(hcos_sweep_run(dims, 2, 10, 0, 0, nullptr, &s), HCOS_OK) << hcos_last_error();
  ASSERT_EQ(hcos_sweep_row_count(s), 2u);
  hcos_sweep_row row{};
  ASSERT_EQ(hcos_sweep_row_at(s, 1, &row), HCOS_OK);
  EXPECT_EQ(row.d, 4u);
  EXPECT_EQ(row.qubits, 8u);
  EXPECT_EQ(row.samples, 10u);
  EXPECT_EQ(row.pearson_defined, 1);
  EXPECT_EQ(hcos_sweep_row_at(s, 2, &row), HCOS_ERR_INVALID_ARGUMENT);

  const auto table = dir / "table.csv";
  const auto scatter = dir / "scatter.csv";
  ASSERT_EQ(hcos_sweep_write_table(s, table.string().c_str()), HCOS_OK);
  ASSERT_EQ(hcos_sweep_write_scatter(s, 4, scatter.string().c_str()), HCOS_OK);
  const std::string t = slurp(table);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 3);
  const std::string sc = slurp(scatter);
  EXPECT_EQ(std::count(sc.begin(), sc.end(), '\n'), 11);
  EXPECT_NE(sc.find("\n0,4,"), std::string::npos);
  EXPECT_EQ(hcos_sweep_write_scatter(s, 3, (dir / "none.csv").string().c_str()),
            HCOS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hcos_sweep_write_table(s, (dir / "no" / "such" / "t.csv").string().c_str()),
            HCOS_ERR_IO);
  hcos_sweep_destroy(s);

  const size_t one[] = {3};
  EXPECT_EQ(hcos_sweep_run(one, 1, 1, 0, 0, nullptr, &s), HCOS_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(hcos_sweep_run(one, 1, 5, 0, 1, nullptr, &s), HCOS_OK);
  ASSERT_EQ(hcos_sweep_row_at(s, 0, &row), HCOS_OK);
  EXPECT_EQ(row.pearson_defined, 0);
  EXPECT_TRUE(std::isnan(row.pearson));
  EXPECT_LE(row.rmse, 1e-12);
  hcos_sweep_destroy(s);
  std::filesystem::remove_all(dir);
}

TEST(CApi, Attention) {
  const double rows[] = {1, 0, 0, 1};
  hcos_attention* a = nullptr;
  ASSERT_EQ(hcos_attention_run(rows, 2, rows, 2, 2, nullptr, &a), HCOS_OK);
  EXPECT_EQ(hcos_attention_rows(a), 2u);
  EXPECT_EQ(hcos_attention_cols(a), 2u);
  EXPECT_NEAR(hcos_attention_quantum_at(a, 0, 1), -1.0, 1e-14);
  EXPECT_EQ(hcos_attention_classical_at(a, 0, 1), 0.0);
  EXPECT_TRUE(std::isnan(hcos_attention_quantum_at(a, 5, 0)));
  EXPECT_NEAR(hcos_attention_max_abs_diff(a), 1.0, 1e-14);
  hcos_attention_destroy(a);

  hcos_config* cfg = nullptr;
  hcos_config_create(&cfg);
  hcos_config_set_budget(cfg, 8);
  ASSERT_EQ(hcos_attention_run_random(16, 8, 1, cfg, &a), HCOS_OK);
  EXPECT_EQ(hcos_attention_chunk_runs_per_pair(a), 4u);
  EXPECT_GE(hcos_attention_frobenius_diff(a), 0.0);
  size_t needed = 0;
  hcos_attention_diff_json(a, nullptr, 0, &needed);
  std::string json(needed, '\0');
  ASSERT_EQ(hcos_attention_diff_json(a, json.data(), json.size(), nullptr), HCOS_OK);
  EXPECT_EQ(json.rfind("{\"chunk_runs_per_pair\":4,", 0), 0u);
  hcos_attention_destroy(a);
  hcos_config_destroy(cfg);

  const double zero_row[] = {1, 0, 0, 0};
  EXPECT_EQ(hcos_attention_run(rows, 2, zero_row, 2, 2, nullptr, &a), HCOS_ERR_DEGENERATE);
  EXPECT_NE(std::string(hcos_last_error()).find("key row 1"), std::string::npos);
}

TEST(CApi, MatrixFileReader) {
  const auto path = std::filesystem::temp_directory_path() / "hcos_capi_matrix.csv";
  {
    std::ofstream out(path);
    out << "1,0\n0,1\n";
  }
  double* data = nullptr;
  size_t r = 0, c = 0;
  ASSERT_EQ(hcos_read_matrix_file(path.string().c_str(), &data, &r, &c), HCOS_OK);
  EXPECT_EQ(r, 2u);
  EXPECT_EQ(c, 2u);
  EXPECT_EQ(data[3], 1.0);
  hcos_free(data);
  std::filesystem::remove(path);
  EXPECT_EQ(hcos_read_matrix_file(path.string().c_str(), &data, &r, &c), HCOS_ERR_IO);
}

}  // namespace
