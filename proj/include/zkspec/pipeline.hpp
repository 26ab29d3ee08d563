#ifndef ZKSPEC_PIPELINE_HPP
#define ZKSPEC_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "zkspec/certify.hpp"

namespace zk {

enum class OperatorSelect { M, B2, L_op, P2bar, all };

std::optional<OperatorSelect> parse_operator(const std::string& name);

struct RunConfig {
  double L = 20.0;
  double a = 4.0;
  int N = 48;
  int radial_nodes = 2000;
  OperatorSelect op = OperatorSelect::M;
  double tol_eig = 1e-8;
  double tol_radial = 1e-10;
  int max_radial_iter = 500;
  double parity_tol = 1e-6;
  bool use_cache = true;
  std::string cache_dir; // empty: caching disabled
};

struct SpectralReport {
  std::string operator_label;
  int N = 0;
  double L = 0.0;
  double a = 0.0;
  std::vector<EigenPair> pairs;
  Eigen::MatrixXd angle_matrix; // 2 x k, rows {Q, Qx}
  Certification cert;
  bool has_c1 = false;
  double c1_estimate = 0.0;
  double cutoff_used = 0.0;
  double tol_eig = 0.0;
  double wall_time_s = 0.0;
  std::vector<std::string> warnings;
};

std::string report_json(const SpectralReport& report);

struct PipelineResult {
  RadialProfile profile;
  std::shared_ptr<const Grid1D> grid;
  TensorField Q, Qx;
  std::vector<SpectralReport> reports;
};

/// Ground state (cached or computed) -> grid -> fields -> operators ->
/// eigenpairs -> certification.  Deterministic given the config.
PipelineResult run_pipeline(const RunConfig& config);

/// Write one report JSON per operator into out_dir; with emit_slices also
/// CSV plot data (radial profile, Q field, eigenfunction y=0 slices, summary).
void write_outputs(const PipelineResult& result, const std::string& out_dir,
                   bool emit_slices);

} // namespace zk

#endif
