// Command-line front end; talks to the library exclusively through the
// zkspec C API.
#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zkspec.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNotCertified = 4;

int status_to_exit(zk_status s) {
  switch (s) {
    case ZK_OK: return 0;
    case ZK_EINVAL: return kExitConfig;
    case ZK_ENOCONV:
    case ZK_EBRACKET: return kExitNoConvergence;
    default: return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral coercivity toolkit: ground state, virial operators, "
               "eigenvalues below the essential spectrum, angle-lemma "
               "certification"};

  zk_config cfg;
  zk_config_init(&cfg);

  std::string op = "M", out_dir = "out", cache_dir, config_path;
  bool no_cache = false, emit_slices = false, require_positive = false;

  app.add_option("--L", cfg.L, "domain half-width")->capture_default_str();
  app.add_option("--a", cfg.a, "grid mapping steepness")->capture_default_str();
  app.add_option("--n", cfg.N, "polynomial degree per dimension (even)")
      ->capture_default_str();
  app.add_option("--radial-nodes", cfg.radial_nodes,
                 "nodes of the 1D radial solve")
      ->capture_default_str();
  app.add_option("--operator", op, "M, B2, L, P2bar or all")
      ->capture_default_str();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "radial profile cache directory");
  app.add_flag("--no-cache", no_cache, "do not reuse cached radial profiles");
  app.add_flag("--emit-slices", emit_slices, "also write CSV plot data");
  app.add_option("--tol-eig", cfg.tol_eig, "eigensolver residual tolerance")
      ->capture_default_str();
  app.add_option("--tol-radial", cfg.tol_radial,
                 "radial solver residual tolerance")
      ->capture_default_str();
  app.add_flag("--require-positive", require_positive,
               "exit nonzero unless every coercivity verdict is positive");
  app.add_option("--config", config_path,
                 "JSON config file (command-line flags win)");

  CLI11_PARSE(app, argc, argv);

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open config file %s\n",
                   config_path.c_str());
      return kExitConfig;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: bad config file: %s\n", e.what());
      return kExitConfig;
    }
    auto use = [&](const char* key) {
      return j.contains(key) && app.get_option_no_throw(std::string("--") + key)
                 ->count() == 0;
    };
    if (use("L")) cfg.L = j["L"];
    if (use("a")) cfg.a = j["a"];
    if (use("n")) cfg.N = j["n"];
    if (use("radial-nodes")) cfg.radial_nodes = j["radial-nodes"];
    if (use("operator")) op = j["operator"];
    if (use("out")) out_dir = j["out"];
    if (use("cache-dir")) cache_dir = j["cache-dir"];
    if (use("tol-eig")) cfg.tol_eig = j["tol-eig"];
    if (use("tol-radial")) cfg.tol_radial = j["tol-radial"];
    if (j.contains("no-cache") && !no_cache) no_cache = j["no-cache"];
    if (j.contains("emit-slices") && !emit_slices) emit_slices = j["emit-slices"];
    if (j.contains("require-positive") && !require_positive)
      require_positive = j["require-positive"];
  }

  cfg.op = op.c_str();
  cfg.use_cache = no_cache ? 0 : 1;
  cfg.cache_dir = cache_dir.empty() ? nullptr : cache_dir.c_str();

  zk_run_handle* run = nullptr;
  const zk_status status = zk_run(&cfg, &run);
  if (status != ZK_OK) {
    std::fprintf(stderr, "error: %s (%s)\n", zk_status_message(status),
                 zk_last_error());
    return status_to_exit(status);
  }

  const zk_status ws = zk_run_write_outputs(run, out_dir.c_str(),
                                            emit_slices ? 1 : 0);
  if (ws != ZK_OK) {
    std::fprintf(stderr, "error: %s (%s)\n", zk_status_message(ws),
                 zk_last_error());
    zk_run_free(run);
    return status_to_exit(ws);
  }

  bool all_positive = true;
  for (int i = 0; i < zk_run_report_count(run); ++i) {
    std::printf("%s\n", zk_run_report_json(run, i));
    if (zk_run_report_positive(run, i) != 1) all_positive = false;
  }
  zk_run_free(run);

  if (require_positive && !all_positive) {
    std::fprintf(stderr, "error: coercivity verdict not positive\n");
    return kExitNotCertified;
  }
  return 0;
}
