#include "zkspec/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "zkspec/error.hpp"
#include "zkspec/operators.hpp"

namespace zk {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<OperatorSelect> parse_operator(const std::string& name) {
  if (name == "M") return OperatorSelect::M;
  if (name == "B2") return OperatorSelect::B2;
  if (name == "L" || name == "L_op") return OperatorSelect::L_op;
  if (name == "P2bar" || name == "Mbar") return OperatorSelect::P2bar;
  if (name == "all") return OperatorSelect::all;
  return std::nullopt;
}

namespace {

std::string cache_file(const RunConfig& cfg) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "radial_L%g_n%d.txt", cfg.L,
                cfg.radial_nodes);
  return (fs::path(cfg.cache_dir) / buf).string();
}

RadialProfile obtain_profile(const RunConfig& cfg) {
  const bool caching = cfg.use_cache && !cfg.cache_dir.empty();
  if (caching) {
    const std::string path = cache_file(cfg);
    if (fs::exists(path)) {
      try {
        RadialProfile p = load_profile(path);
        const bool ok = std::abs(p.r_max - 1.5 * cfg.L) < 1e-9 &&
                        static_cast<int>(p.values.size()) == cfg.radial_nodes &&
                        p.method == RadialMethod::renormalization;
        if (ok) return p;
      } catch (const Error&) {
        // unreadable cache entries are recomputed below
      }
    }
  }
  RadialProfile p =
      solve_radial(cfg.L, cfg.radial_nodes, cfg.tol_radial, cfg.max_radial_iter);
  if (caching) {
    fs::create_directories(cfg.cache_dir);
    save_profile(p, cache_file(cfg));
  }
  return p;
}

SpectralReport analyze(const DiscreteOperator& op, const RunConfig& cfg,
                       const PipelineResult& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  SpectralReport rep;
  rep.operator_label = op_label_name(op.label);
  rep.N = cfg.N;
  rep.L = cfg.L;
  rep.a = cfg.a;
  rep.tol_eig = cfg.tol_eig;
  if (cfg.N < 32)
    rep.warnings.push_back("resolution below validated range (N < 32)");

  rep.pairs = eig_below(op, *ctx.grid, op.ess_min);
  fix_signs(rep.pairs, ctx.Q, ctx.Qx);
  rep.angle_matrix = angles(rep.pairs, ctx.Q, ctx.Qx);

  // The coercivity statement lives at the B+P scale: operators assembled
  // with the factor 2 are halved and certified against lambda_perp = 1/2.
  const bool halved = op.label == OpLabel::M || op.label == OpLabel::B2 ||
                      op.label == OpLabel::Mbar;
  std::vector<EigenPair> cert_pairs = rep.pairs;
  double cutoff = op.ess_min;
  if (halved) {
    for (auto& p : cert_pairs) p.value *= 0.5;
    cutoff = 0.5 * op.ess_min;
  }
  rep.cutoff_used = cutoff;
  rep.cert = certify_coercivity(ctx.Q, ctx.Qx, cert_pairs, cutoff);

  if (op.label == OpLabel::L_op) {
    const TensorField q3 = multiply(multiply(ctx.Q, ctx.Q), ctx.Q);
    const TensorField qy = dy(ctx.Q);
    const double mu =
        constrained_rayleigh_min(op, *ctx.grid, {q3, ctx.Qx, qy});
    if (mu > 0.0) {
      rep.has_c1 = true;
      rep.c1_estimate = 1.0 / mu;
    }
  }

  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

} // namespace

std::string report_json(const SpectralReport& rep) {
  json j;
  j["operator"] = rep.operator_label;
  j["grid"] = {{"N", rep.N}, {"L", rep.L}, {"a", rep.a}};
  json vals = json::array(), res = json::array(), par = json::array();
  json aq = json::array(), aqx = json::array();
  for (size_t k = 0; k < rep.pairs.size(); ++k) {
    vals.push_back(rep.pairs[k].value);
    res.push_back(rep.pairs[k].residual);
    par.push_back(parity_name(rep.pairs[k].parity));
    aq.push_back(rep.angle_matrix(0, k));
    aqx.push_back(rep.angle_matrix(1, k));
  }
  j["eigenvalues"] = vals;
  j["residuals"] = res;
  j["parities"] = par;
  j["angles"] = {{"Q", aq}, {"Qx", aqx}};
  j["bounds"] = {{"odd", rep.cert.odd_bound},
                 {"even", rep.cert.even_bound},
                 {"overall", rep.cert.overall}};
  j["verdict"] = rep.cert.positive ? "positive" : "not-certified";
  if (rep.cert.flagged) j["flag"] = rep.cert.flag_reason;
  if (rep.has_c1)
    j["c1_estimate"] = rep.c1_estimate;
  else
    j["c1_estimate"] = nullptr;
  j["cutoff"] = rep.cutoff_used;
  j["tol_eig"] = rep.tol_eig;
  j["warnings"] = rep.warnings;
  j["wall_time_s"] = rep.wall_time_s;
  return j.dump(2) + "\n";
}

PipelineResult run_pipeline(const RunConfig& cfg) {
  if (cfg.N < 4 || cfg.N % 2 != 0 || cfg.L < 10.0 || cfg.a <= 0.0 ||
      cfg.radial_nodes < 200 || cfg.tol_eig <= 0.0 || cfg.tol_radial <= 0.0)
    throw Error(Errc::invalid_argument, "run_pipeline: invalid configuration");

  PipelineResult result;
  result.profile = obtain_profile(cfg);
  result.grid = std::make_shared<Grid1D>(map_grid(cfg.N, cfg.L, cfg.a));
  result.Q = radial_to_field(result.profile, result.grid);
  result.Qx = dx(result.Q);

  std::vector<OperatorSelect> selected;
  if (cfg.op == OperatorSelect::all)
    selected = {OperatorSelect::M, OperatorSelect::B2, OperatorSelect::L_op,
                OperatorSelect::P2bar};
  else
    selected = {cfg.op};

  for (OperatorSelect sel : selected) {
    DiscreteOperator op;
    switch (sel) {
      case OperatorSelect::M: op = assemble_M(result.Q); break;
      case OperatorSelect::B2: op = assemble_B2(result.Q); break;
      case OperatorSelect::L_op: op = assemble_L(result.Q); break;
      case OperatorSelect::P2bar: op = assemble_Mbar(result.Q); break;
      case OperatorSelect::all: continue;
    }
    result.reports.push_back(analyze(op, cfg, result));
  }
  return result;
}

void write_outputs(const PipelineResult& result, const std::string& out_dir,
                   bool emit_slices) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  for (const auto& rep : result.reports) {
    std::ofstream out(dir / ("report_" + rep.operator_label + ".json"));
    if (!out) throw Error(Errc::io, "write_outputs: cannot write report");
    out << report_json(rep);
  }
  if (!emit_slices) return;

  save_profile(result.profile, (dir / "radial_profile.txt").string());
  write_csv(result.Q, (dir / "q_field.csv").string());

  const int N = result.grid->N;
  const int m = N - 1;
  const int j0 = N / 2 - 1; // interior row index of y = 0
  std::ofstream sum(dir / "summary.csv");
  sum << "operator,index,eigenvalue,parity,angle_Q,angle_Qx\n";
  for (const auto& rep : result.reports) {
    for (size_t k = 0; k < rep.pairs.size(); ++k) {
      sum << rep.operator_label << "," << k << "," << rep.pairs[k].value << ","
          << parity_name(rep.pairs[k].parity) << "," << rep.angle_matrix(0, k)
          << "," << rep.angle_matrix(1, k) << "\n";
      std::ofstream slice(dir / ("eigfun_" + rep.operator_label + "_" +
                                 std::to_string(k) + ".csv"));
      slice << "x,phi\n";
      for (int i = 0; i < m; ++i)
        slice << result.grid->x[i + 1] << ","
              << rep.pairs[k].vector[j0 * m + i] << "\n";
    }
  }
}

} // namespace zk
