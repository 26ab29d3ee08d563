#include "zkspec.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "zkspec/error.hpp"
#include "zkspec/pipeline.hpp"

struct zk_radial {
  zk::RadialProfile profile;
};

struct zk_run_handle {
  zk::PipelineResult result;
  std::vector<std::string> json; // serialized once, stable addresses
};

namespace {

thread_local std::string g_last_error;

zk_status to_status(const zk::Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case zk::Errc::invalid_argument: return ZK_EINVAL;
    case zk::Errc::no_convergence: return ZK_ENOCONV;
    case zk::Errc::bracket: return ZK_EBRACKET;
    case zk::Errc::rank_deficient: return ZK_ERANK;
    case zk::Errc::io: return ZK_EIO;
    case zk::Errc::eigensolver: return ZK_EEIG;
    case zk::Errc::not_certified: return ZK_EINTERNAL;
  }
  return ZK_EINTERNAL;
}

template <typename Fn>
zk_status guarded(Fn&& fn) {
  try {
    fn();
    return ZK_OK;
  } catch (const zk::Error& e) {
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZK_EINTERNAL;
  }
}

} // namespace

extern "C" {

const char* zk_status_message(zk_status status) {
  switch (status) {
    case ZK_OK: return "ok";
    case ZK_EINVAL: return "invalid argument";
    case ZK_ENOCONV: return "iteration did not converge";
    case ZK_EBRACKET: return "bracket does not straddle the separatrix";
    case ZK_ERANK: return "rank-deficient constraint set";
    case ZK_EIO: return "I/O failure";
    case ZK_EEIG: return "eigensolver failure";
    case ZK_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* zk_last_error(void) { return g_last_error.c_str(); }

zk_status zk_radial_solve(double L, int n_nodes, double tol, int max_iter,
                          zk_radial** out) {
  if (!out) return ZK_EINVAL;
  return guarded([&] {
    auto* h = new zk_radial{zk::solve_radial(L, n_nodes, tol, max_iter)};
    *out = h;
  });
}

zk_status zk_radial_shoot(double L, double amp_lo, double amp_hi, double tol,
                          zk_radial** out) {
  if (!out) return ZK_EINVAL;
  return guarded([&] {
    auto* h = new zk_radial{zk::shoot_radial(L, amp_lo, amp_hi, tol)};
    *out = h;
  });
}

zk_status zk_radial_load(const char* path, zk_radial** out) {
  if (!out || !path) return ZK_EINVAL;
  return guarded([&] { *out = new zk_radial{zk::load_profile(path)}; });
}

zk_status zk_radial_save(const zk_radial* profile, const char* path) {
  if (!profile || !path) return ZK_EINVAL;
  return guarded([&] { zk::save_profile(profile->profile, path); });
}

int zk_radial_size(const zk_radial* profile) {
  return profile ? static_cast<int>(profile->profile.values.size()) : 0;
}

int zk_radial_iterations(const zk_radial* profile) {
  return profile ? profile->profile.iterations : 0;
}

double zk_radial_residual(const zk_radial* profile) {
  return profile ? profile->profile.residual : 0.0;
}

int zk_radial_data(const zk_radial* profile, double* r, double* value,
                   double* deriv, int cap) {
  if (!profile || cap <= 0) return 0;
  const auto& p = profile->profile;
  const int n = std::min(cap, static_cast<int>(p.values.size()));
  for (int i = 0; i < n; ++i) {
    if (r) r[i] = p.nodes[i];
    if (value) value[i] = p.values[i];
    if (deriv) deriv[i] = p.deriv[i];
  }
  return n;
}

zk_status zk_radial_diagnostics(const zk_radial* profile, double* mass,
                                double* grad_sq, double* l4_4,
                                double* energy) {
  if (!profile) return ZK_EINVAL;
  return guarded([&] {
    const zk::RadialDiagnostics d = zk::radial_diagnostics(profile->profile);
    if (mass) *mass = d.mass;
    if (grad_sq) *grad_sq = d.grad_sq;
    if (l4_4) *l4_4 = d.l4_4;
    if (energy) *energy = d.energy;
  });
}

void zk_radial_free(zk_radial* profile) { delete profile; }

void zk_config_init(zk_config* config) {
  if (!config) return;
  std::memset(config, 0, sizeof(*config));
  config->L = 20.0;
  config->a = 4.0;
  config->N = 48;
  config->radial_nodes = 2000;
  config->op = "M";
  config->tol_eig = 1e-8;
  config->tol_radial = 1e-10;
  config->use_cache = 1;
  config->cache_dir = nullptr;
}

zk_status zk_run(const zk_config* config, zk_run_handle** out) {
  if (!config || !out) return ZK_EINVAL;
  zk::RunConfig cfg;
  cfg.L = config->L;
  cfg.a = config->a;
  cfg.N = config->N;
  cfg.radial_nodes = config->radial_nodes;
  cfg.tol_eig = config->tol_eig;
  cfg.tol_radial = config->tol_radial;
  cfg.use_cache = config->use_cache != 0;
  cfg.cache_dir = config->cache_dir ? config->cache_dir : "";
  const auto sel = zk::parse_operator(config->op ? config->op : "");
  if (!sel) {
    g_last_error = "unknown operator selector";
    return ZK_EINVAL;
  }
  cfg.op = *sel;
  return guarded([&] {
    auto h = std::make_unique<zk_run_handle>();
    h->result = zk::run_pipeline(cfg);
    for (const auto& rep : h->result.reports)
      h->json.push_back(zk::report_json(rep));
    *out = h.release();
  });
}

int zk_run_report_count(const zk_run_handle* run) {
  return run ? static_cast<int>(run->result.reports.size()) : 0;
}

const char* zk_run_report_operator(const zk_run_handle* run, int index) {
  if (!run || index < 0 || index >= zk_run_report_count(run)) return nullptr;
  return run->result.reports[index].operator_label.c_str();
}

const char* zk_run_report_json(const zk_run_handle* run, int index) {
  if (!run || index < 0 || index >= zk_run_report_count(run)) return nullptr;
  return run->json[index].c_str();
}

int zk_run_report_positive(const zk_run_handle* run, int index) {
  if (!run || index < 0 || index >= zk_run_report_count(run)) return -1;
  return run->result.reports[index].cert.positive ? 1 : 0;
}

int zk_run_report_eigenvalue_count(const zk_run_handle* run, int index) {
  if (!run || index < 0 || index >= zk_run_report_count(run)) return -1;
  return static_cast<int>(run->result.reports[index].pairs.size());
}

int zk_run_report_eigenvalues(const zk_run_handle* run, int index,
                              double* values, int cap) {
  if (!run || !values || index < 0 || index >= zk_run_report_count(run))
    return 0;
  const auto& pairs = run->result.reports[index].pairs;
  const int n = std::min(cap, static_cast<int>(pairs.size()));
  for (int i = 0; i < n; ++i) values[i] = pairs[i].value;
  return n;
}

zk_status zk_run_write_outputs(const zk_run_handle* run, const char* out_dir,
                               int emit_slices) {
  if (!run || !out_dir) return ZK_EINVAL;
  return guarded(
      [&] { zk::write_outputs(run->result, out_dir, emit_slices != 0); });
}

void zk_run_free(zk_run_handle* run) { delete run; }

} // extern "C"
