#ifndef ZKSPEC_RADIAL_HPP
#define ZKSPEC_RADIAL_HPP

#include <string>
#include <vector>

namespace zk {

enum class RadialMethod { renormalization, shooting };

/// 1D radial ground state R(r) of  R'' + R'/r - R + R^3 = 0  on [0, 3L/2]
/// with R'(0) = 0 and R(3L/2) = 0, on a uniform node set.
struct RadialProfile {
  double r_max = 0.0;
  std::vector<double> nodes;
  std::vector<double> values;
  std::vector<double> deriv;
  RadialMethod method = RadialMethod::renormalization;
  int iterations = 0;
  double residual = 0.0;
};

/// Integrals of the 2D extension Q(x,y) = R(sqrt(x^2+y^2)), all with the
/// 2*pi*r*dr measure.  energy = grad_sq/2 - l4_4/4 and vanishes for the
/// ground state.
struct RadialDiagnostics {
  double mass = 0.0;
  double grad_sq = 0.0;
  double l4_4 = 0.0;
  double energy = 0.0;
};

/// Spectral-renormalization (Petviashvili) fixed point on a uniform grid.
/// Iterates R <- m^{3/2} (-Lap_r + 1)^{-1} R^3 with the normalization ratio
/// m = <(-Lap_r+1)R, R> / <R^3, R> until the discrete ODE residual drops
/// below tol in max norm.
RadialProfile solve_radial(double L, int n_nodes, double tol, int max_iter);

/// Independent oracle: bisection on the initial amplitude R(0) with an
/// adaptive RK integrator.  Overshoot = R crosses zero; undershoot = R'
/// turns positive while R > 0.  The returned profile is sampled on the same
/// uniform node set solve_radial uses.
RadialProfile shoot_radial(double L, double amp_lo, double amp_hi, double tol,
                           int n_nodes = 2000);

RadialDiagnostics radial_diagnostics(const RadialProfile& profile);

/// Plain-text cache: one `# L=<v> N=<v> method=<v> residual=<v>` header line,
/// then one `r value deriv` triple per line in full decimal precision.
void save_profile(const RadialProfile& profile, const std::string& path);
RadialProfile load_profile(const std::string& path);

} // namespace zk

#endif
