// SPDX-License-Identifier: Apache-2.0
//
// hcos: command-line front end to the C API.
//
//   hcos estimate   --v 0.6,0.8 --w 0.8,0.6 [--v-file F] [--w-file F]
//   hcos sweep      --dims 2,4,8,12 --samples 100 --out table.csv --scatter-dir DIR
//   hcos cottention --dmodel 16 --seq 8 --budget 8 --seed S --out DIR
//   hcos resources  --dim 8
//
// Global flags (before or after the subcommand): --exact | --shots N,
// --budget B, --seed S, --out PATH.
//
// Exit codes: 0 success, 2 usage/validation error, 1 runtime error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcos/hcos.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

class CliFailure {
 public:
  CliFailure(int exit_code, std::string message)
      : exit_code_(exit_code), message_(std::move(message)) {}
  int exit_code() const { return exit_code_; }
  const std::string& message() const { return message_; }

 private:
  int exit_code_;
  std::string message_;
};

void check(hcos_status st) {
  if (st == HCOS_OK) return;
  const bool runtime = st == HCOS_ERR_IO || st == HCOS_ERR_INTERNAL;
  throw CliFailure(runtime ? kExitRuntime : kExitUsage,
                   std::string(hcos_status_string(st)) + ": " + hcos_last_error());
}

// Calls a (buf, cap, needed) string API twice: once to size, once to fill.
template <typename Fn>
std::string fetch_string(Fn&& call) {
  size_t needed = 0;
  const hcos_status probe = call(nullptr, 0, &needed);
  if (probe != HCOS_OK && probe != HCOS_ERR_BUFFER_TOO_SMALL) check(probe);
  std::string out(needed, '\0');
  check(call(out.data(), out.size(), &needed));
  out.resize(needed - 1);
  return out;
}

template <typename T, void (*Destroy)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Destroy(p); }
};

using VectorPtr = std::unique_ptr<hcos_vector, HandleDeleter<hcos_vector, hcos_vector_destroy>>;
using ConfigPtr = std::unique_ptr<hcos_config, HandleDeleter<hcos_config, hcos_config_destroy>>;
using EstimatePtr =
    std::unique_ptr<hcos_estimate, HandleDeleter<hcos_estimate, hcos_estimate_destroy>>;
using SweepPtr = std::unique_ptr<hcos_sweep, HandleDeleter<hcos_sweep, hcos_sweep_destroy>>;
using AttentionPtr =
    std::unique_ptr<hcos_attention, HandleDeleter<hcos_attention, hcos_attention_destroy>>;

struct GlobalOptions {
  bool exact = false;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint32_t> budget;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

ConfigPtr make_config(const GlobalOptions& g) {
  hcos_config* raw = nullptr;
  check(hcos_config_create(&raw));
  ConfigPtr cfg(raw);
  if (g.shots) {
    if (*g.shots == 0) throw CliFailure(kExitUsage, "--shots must be at least 1");
    check(hcos_config_set_shots(cfg.get(), *g.shots));
  }
  if (g.budget) {
    if (*g.budget == 0) throw CliFailure(kExitUsage, "--budget must be an even integer >= 2");
    check(hcos_config_set_budget(cfg.get(), *g.budget));
  }
  check(hcos_config_set_seed(cfg.get(), g.seed));
  return cfg;
}

std::string read_file(const std::string& path) {
  char* raw = nullptr;
  check(hcos_read_text_file(path.c_str(), &raw));
  std::string text(raw);
  hcos_free(raw);
  return text;
}

void write_file(const std::string& path, const std::string& content) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw CliFailure(kExitRuntime, "cannot open '" + path + "' for writing");
  const bool ok = std::fwrite(content.data(), 1, content.size(), f) == content.size();
  if (std::fclose(f) != 0 || !ok) throw CliFailure(kExitRuntime, "failed writing '" + path + "'");
}

VectorPtr load_vector(const std::string& inline_text, const std::string& file,
                      const char* label, hcos_norm_policy policy) {
  if (inline_text.empty() == file.empty()) {
    throw CliFailure(kExitUsage, std::string("give exactly one of --") + label + " or --" + label +
                                     "-file");
  }
  const std::string text = file.empty() ? inline_text : read_file(file);
  const std::string origin = file.empty() ? std::string("--") + label : file;
  hcos_vector* raw = nullptr;
  check(hcos_vector_parse(text.c_str(), origin.c_str(), policy, &raw));
  return VectorPtr(raw);
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliFailure(kExitRuntime, "cannot create directory '" + dir + "': " + ec.message());
}

// ---- subcommands

struct EstimateArgs {
  std::string v, w, v_file, w_file, trace;
  std::string policy = "auto";
};

void run_estimate(const GlobalOptions& g, const EstimateArgs& a) {
  const hcos_norm_policy policy = a.policy == "reject" ? HCOS_NORM_REJECT : HCOS_NORM_AUTO;
  const VectorPtr v = load_vector(a.v, a.v_file, "v", policy);
  const VectorPtr w = load_vector(a.w, a.w_file, "w", policy);
  const ConfigPtr cfg = make_config(g);

  hcos_estimate* raw = nullptr;
  check(hcos_estimate_similarity(v.get(), w.get(), cfg.get(), &raw));
  const EstimatePtr estimate(raw);
  const std::string json = fetch_string([&](char* b, size_t c, size_t* n) {
    return hcos_estimate_json(estimate.get(), b, c, n);
  });

  if (!a.trace.empty()) {
    const size_t d = hcos_vector_dim(v.get());
    std::vector<double> ve(d), we(d);
    check(hcos_vector_entries(v.get(), ve.data(), d));
    check(hcos_vector_entries(w.get(), we.data(), d));
    std::string trace;
    for (size_t i = 0; i < d; ++i) {
      double tv = 0, tw = 0;
      check(hcos_encode_angle(ve[i], &tv));
      check(hcos_encode_angle(we[i], &tw));
      trace += "# element " + std::to_string(i) + "\n";
      trace += fetch_string(
          [&](char* b, size_t c, size_t* n) { return hcos_circuit_trace(tv, tw, b, c, n); });
    }
    write_file(a.trace, trace);
  }
  if (g.out) write_file(*g.out, json);
  std::cout << json;
}

struct SweepArgs {
  std::vector<size_t> dims{2, 4, 8, 12};
  size_t samples = 100;
  std::string scatter_dir;
  bool force_equal = false;
};

void run_sweep(const GlobalOptions& g, const SweepArgs& a) {
  if (a.samples < 2) throw CliFailure(kExitUsage, "--samples must be at least 2");
  const ConfigPtr cfg = make_config(g);
  hcos_sweep* raw = nullptr;
  check(hcos_sweep_run(a.dims.data(), a.dims.size(), a.samples, g.seed, a.force_equal ? 1 : 0,
                       cfg.get(), &raw));
  const SweepPtr sweep(raw);

  if (g.out) check(hcos_sweep_write_table(sweep.get(), g.out->c_str()));
  if (!a.scatter_dir.empty()) {
    ensure_directory(a.scatter_dir);
    for (size_t d : a.dims) {
      const auto path = std::filesystem::path(a.scatter_dir) / ("scatter_d" + std::to_string(d) + ".csv");
      check(hcos_sweep_write_scatter(sweep.get(), d, path.string().c_str()));
    }
  }
  std::cout << fetch_string([&](char* b, size_t c, size_t* n) {
    return hcos_sweep_summary_text(sweep.get(), b, c, n);
  });
}

struct CottentionArgs {
  size_t dmodel = 16;
  size_t seq = 8;
  std::string queries_file, keys_file;
};

void run_cottention(const GlobalOptions& g, const CottentionArgs& a) {
  const ConfigPtr cfg = make_config(g);
  hcos_attention* raw = nullptr;
  if (a.queries_file.empty() != a.keys_file.empty()) {
    throw CliFailure(kExitUsage, "--queries and --keys must be given together");
  }
  if (!a.queries_file.empty()) {
    double* q = nullptr;
    double* k = nullptr;
    size_t qr = 0, qc = 0, kr = 0, kc = 0;
    check(hcos_read_matrix_file(a.queries_file.c_str(), &q, &qr, &qc));
    std::unique_ptr<double, decltype(&hcos_free)> q_owner(q, hcos_free);
    check(hcos_read_matrix_file(a.keys_file.c_str(), &k, &kr, &kc));
    std::unique_ptr<double, decltype(&hcos_free)> k_owner(k, hcos_free);
    if (qc != kc) {
      throw CliFailure(kExitUsage, "query and key files have different widths");
    }
    check(hcos_attention_run(q, qr, k, kr, qc, cfg.get(), &raw));
  } else {
    if (a.dmodel == 0 || a.seq == 0) throw CliFailure(kExitUsage, "--dmodel and --seq must be >= 1");
    check(hcos_attention_run_random(a.dmodel, a.seq, g.seed, cfg.get(), &raw));
  }
  const AttentionPtr att(raw);
  const std::string diff = fetch_string([&](char* b, size_t c, size_t* n) {
    return hcos_attention_diff_json(att.get(), b, c, n);
  });

  if (g.out) {
    ensure_directory(*g.out);
    const std::filesystem::path dir(*g.out);
    check(hcos_attention_write_quantum(att.get(), (dir / "quantum.csv").string().c_str()));
    check(hcos_attention_write_classical(att.get(), (dir / "classical.csv").string().c_str()));
    write_file((dir / "diff.json").string(), diff);
  }
  std::cout << "chunk_runs_per_pair " << hcos_attention_chunk_runs_per_pair(att.get()) << '\n';
  std::cout << diff;
}

void run_resources(const GlobalOptions& g, size_t dim) {
  const std::string json = fetch_string(
      [&](char* b, size_t c, size_t* n) { return hcos_resource_report_json(dim, b, c, n); });
  if (g.out) write_file(*g.out, json);
  std::cout << json;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cosine-similarity estimation with the angle-encoding elementwise Hadamard test",
               "hcos"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::uint64_t shots = 0;
  std::uint32_t budget = 0;
  std::string out;
  auto* exact_flag = app.add_flag("--exact", g.exact, "Exact expectation values (default)");
  auto* shots_opt = app.add_option("--shots", shots, "Finite-shot sampling with N shots per element");
  auto* budget_opt = app.add_option("--budget", budget, "Qubit budget (even, >= 2); default 2d");
  app.add_option("--seed", g.seed, "Root / base seed");
  auto* out_opt = app.add_option("--out", out, "Output path");
  exact_flag->excludes(shots_opt);
  shots_opt->excludes(exact_flag);

  EstimateArgs est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate the similarity of one vector pair");
  estimate_cmd->fallthrough();
  estimate_cmd->add_option("--v", est.v, "Inline comma-separated vector v");
  estimate_cmd->add_option("--w", est.w, "Inline comma-separated vector w");
  estimate_cmd->add_option("--v-file", est.v_file, "File with one value of v per line");
  estimate_cmd->add_option("--w-file", est.w_file, "File with one value of w per line");
  estimate_cmd->add_option("--policy", est.policy, "Normalization policy")
      ->check(CLI::IsMember({"auto", "reject"}));
  estimate_cmd->add_option("--trace", est.trace, "Write the per-element circuit trace here");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "RMSE / Pearson sweep over random vector pairs");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--dims", sw.dims, "Dimensions")->delimiter(',')->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--samples", sw.samples, "Samples (seeds) per dimension");
  sweep_cmd->add_option("--scatter-dir", sw.scatter_dir, "Directory for per-dimension scatter CSVs");
  sweep_cmd->add_flag("--force-equal", sw.force_equal, "Diagnostic: use w = v");

  CottentionArgs ct;
  auto* cott_cmd = app.add_subcommand("cottention", "Quantum vs classical cosine attention scores");
  cott_cmd->fallthrough();
  cott_cmd->add_option("--dmodel", ct.dmodel, "Row dimension");
  cott_cmd->add_option("--seq", ct.seq, "Number of query rows and key rows");
  cott_cmd->add_option("--queries", ct.queries_file, "CSV matrix of query rows");
  cott_cmd->add_option("--keys", ct.keys_file, "CSV matrix of key rows");

  size_t dim = 0;
  auto* res_cmd = app.add_subcommand("resources", "Resource counts for dimension d");
  res_cmd->fallthrough();
  res_cmd->add_option("--dim", dim, "Vector dimension")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (shots_opt->count() > 0) g.shots = shots;
  if (budget_opt->count() > 0) g.budget = budget;
  if (out_opt->count() > 0) g.out = out;

  try {
    if (*estimate_cmd) run_estimate(g, est);
    if (*sweep_cmd) run_sweep(g, sw);
    if (*cott_cmd) run_cottention(g, ct);
    if (*res_cmd) run_resources(g, dim);
  } catch (const CliFailure& f) {
    std::cerr << "hcos: " << f.message() << '\n';
    return f.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "hcos: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
