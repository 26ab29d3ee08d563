#include "zkspec/radial.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <boost/numeric/odeint.hpp>

#include "zkspec/error.hpp"

namespace zk {

namespace {

// Linear part A = -R'' - R'/r + R, fourth-order differences on the uniform
// grid r_i = i*h, unknowns i = 0..m-1 with R_m = 0 (Dirichlet).  The axis
// uses the symmetric limit R'/r -> R''(0) and mirror ghosts; the last
// interior node falls back to the second-order stencil (the solution there
// is at the e^{-3L/2} level).
Eigen::SparseMatrix<double> radial_operator(int m, double h) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(m) * 6);
  const double ih2 = 1.0 / (12.0 * h * h);
  const double ih1 = 1.0 / (12.0 * h);
  auto add = [&](int i, int j, double v) {
    if (j >= 0 && j < m) trip.emplace_back(i, j, v);
  };

  // i = 0:  -2 R''(0) + R,  R''(0) = (-30 R0 + 32 R1 - 2 R2)/(12 h^2)
  add(0, 0, 60.0 * ih2 + 1.0);
  add(0, 1, -64.0 * ih2);
  add(0, 2, 4.0 * ih2);

  // i = 1: mirror ghost R_{-1} = R_1
  {
    const double r = h;
    add(1, 0, -16.0 * ih2 + 8.0 * ih1 / r);
    add(1, 1, 31.0 * ih2 - 1.0 * ih1 / r + 1.0);
    add(1, 2, -16.0 * ih2 - 8.0 * ih1 / r);
    add(1, 3, 1.0 * ih2 + 1.0 * ih1 / r);
  }

  for (int i = 2; i < m - 1; ++i) {
    const double r = i * h;
    add(i, i - 2, 1.0 * ih2 - 1.0 * ih1 / r);
    add(i, i - 1, -16.0 * ih2 + 8.0 * ih1 / r);
    add(i, i, 30.0 * ih2 + 1.0);
    add(i, i + 1, -16.0 * ih2 - 8.0 * ih1 / r);
    add(i, i + 2, 1.0 * ih2 + 1.0 * ih1 / r);
  }

  // i = m-1: second-order stencil against the Dirichlet boundary
  {
    const int i = m - 1;
    const double r = i * h;
    add(i, i - 1, -1.0 / (h * h) + 1.0 / (2.0 * h * r));
    add(i, i, 2.0 / (h * h) + 1.0);
    add(i, i + 1, -1.0 / (h * h) - 1.0 / (2.0 * h * r)); // dropped (boundary)
  }

  Eigen::SparseMatrix<double> A(m, m);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

// <f,g> with the r dr measure (trapezoid; endpoint r=0 has zero weight).
double inner_r(const Eigen::VectorXd& f, const Eigen::VectorXd& g, double h) {
  const int n = static_cast<int>(f.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    s += w * f[i] * g[i] * (i * h);
  }
  return s * h;
}

// Composite Simpson of samples y_i at spacing h with measure r dr.
double simpson_r(const std::vector<double>& y, double h) {
  const int n = static_cast<int>(y.size());
  auto f = [&](int i) { return y[i] * (i * h); };
  double s = 0.0;
  int last = n - 1;
  if ((n - 1) % 2 != 0) {
    // odd interval count: trapezoid on the final (tail, ~0) interval
    s += 0.5 * h * (f(last - 1) + f(last));
    last -= 1;
  }
  for (int i = 0; i + 2 <= last; i += 2)
    s += h / 3.0 * (f(i) + 4.0 * f(i + 1) + f(i + 2));
  return s;
}

std::vector<double> fd_derivative(const std::vector<double>& y, double h) {
  const int n = static_cast<int>(y.size());
  std::vector<double> d(n);
  auto at = [&](int i) { return y[std::abs(i)]; }; // even extension across 0
  for (int i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      d[i] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) /
             (12.0 * h);
    } else if (i == 0) {
      d[i] = 0.0;
    } else if (i == 1) {
      d[i] = (at(-1) - 8.0 * at(0) + 8.0 * at(2) - at(3)) / (12.0 * h);
    } else if (i + 2 == n) {
      d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
    } else {
      d[i] = (y[i] - y[i - 1]) / h;
    }
  }
  return d;
}

double max_residual(const Eigen::SparseMatrix<double>& A,
                    const Eigen::VectorXd& R) {
  const Eigen::VectorXd res = A * R - R.array().cube().matrix();
  return res.lpNorm<Eigen::Infinity>();
}

using OdeState = std::array<double, 2>;

struct RadialRhs {
  void operator()(const OdeState& s, OdeState& ds, double r) const {
    ds[0] = s[1];
    ds[1] = -s[1] / r + s[0] - s[0] * s[0] * s[0];
  }
};

// Series start near the axis: R = A + B r^2 + C r^4.
OdeState series_start(double amp, double r0) {
  const double B = (amp - amp * amp * amp) / 4.0;
  const double C = B * (1.0 - 3.0 * amp * amp) / 16.0;
  return {amp + B * r0 * r0 + C * r0 * r0 * r0 * r0,
          2.0 * B * r0 + 4.0 * C * r0 * r0 * r0};
}

enum class ShotOutcome { overshoot, undershoot, decayed };

// Integrate outward from amplitude amp; >0  means R crossed zero
// (overshoot), <0 means R' turned positive while R > 0 (undershoot).
ShotOutcome classify_shot(double amp, double r_end) {
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-14, 1e-13,
                                      ode::runge_kutta_fehlberg78<OdeState>());
  const double r0 = 1e-2;
  OdeState s = series_start(amp, r0);
  double r = r0;
  double dr = 1e-3;
  RadialRhs rhs;
  while (r < r_end) {
    double step = std::min(dr, r_end - r);
    auto result = stepper.try_step(rhs, s, r, step);
    if (result == ode::fail) {
      dr = step;
      continue;
    }
    dr = step;
    if (s[0] <= 0.0) return ShotOutcome::overshoot;
    if (s[1] >= 0.0 && s[0] > 0.0) return ShotOutcome::undershoot;
    if (s[0] > 10.0 * amp) return ShotOutcome::undershoot;
  }
  return ShotOutcome::decayed;
}

} // namespace

RadialProfile solve_radial(double L, int n_nodes, double tol, int max_iter) {
  if (L < 10.0 || n_nodes < 200 || tol <= 0.0 || max_iter < 1)
    throw Error(Errc::invalid_argument,
                "solve_radial: need L >= 10, n_nodes >= 200, tol > 0");

  const double r_max = 1.5 * L;
  const double h = r_max / (n_nodes - 1);
  const int m = n_nodes - 1; // unknowns (last node pinned to zero)

  const Eigen::SparseMatrix<double> A = radial_operator(m, h);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success)
    throw Error(Errc::no_convergence, "solve_radial: factorization failed");

  Eigen::VectorXd R(m);
  for (int i = 0; i < m; ++i) {
    const double r = i * h;
    R[i] = 2.2 * std::exp(-r * r);
  }

  int iter = 0;
  double res = std::numeric_limits<double>::infinity();
  for (; iter < max_iter; ++iter) {
    const Eigen::VectorXd cube = R.array().cube();
    const double num = inner_r(A * R, R, h);
    const double den = inner_r(cube, R, h);
    if (!(den > 0.0) || !std::isfinite(num)) {
      throw Error(Errc::no_convergence,
                  "solve_radial: normalization ratio degenerated");
    }
    const double mfac = num / den;
    R = std::pow(mfac, 1.5) * lu.solve(cube);
    if (R.lpNorm<Eigen::Infinity>() < 1e-8)
      throw Error(Errc::no_convergence, "solve_radial: collapsed to zero");
    res = max_residual(A, R);
    if (res <= tol) {
      ++iter;
      break;
    }
  }
  if (res > tol)
    throw Error(Errc::no_convergence,
                "solve_radial: residual " + std::to_string(res) + " after " +
                    std::to_string(max_iter) + " iterations");

  RadialProfile p;
  p.r_max = r_max;
  p.method = RadialMethod::renormalization;
  p.iterations = iter;
  p.residual = res;
  p.nodes.resize(n_nodes);
  p.values.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    p.nodes[i] = i * h;
    p.values[i] = (i < m) ? R[i] : 0.0;
  }
  p.values[n_nodes - 1] = 0.0;
  p.deriv = fd_derivative(p.values, h);
  p.deriv[0] = 0.0;
  return p;
}

RadialProfile shoot_radial(double L, double amp_lo, double amp_hi, double tol,
                           int n_nodes) {
  if (L < 10.0 || !(amp_lo < amp_hi) || tol <= 0.0 || n_nodes < 200)
    throw Error(Errc::invalid_argument, "shoot_radial: invalid arguments");

  const double r_max = 1.5 * L;
  const ShotOutcome lo = classify_shot(amp_lo, r_max);
  const ShotOutcome hi = classify_shot(amp_hi, r_max);
  if (lo != ShotOutcome::undershoot || hi != ShotOutcome::overshoot)
    throw Error(Errc::bracket,
                "shoot_radial: bracket does not straddle the separatrix");

  // Bisect to the floating-point limit; stopping earlier than tol would
  // leave the unstable mode visible well inside [0, L].
  double a = amp_lo, b = amp_hi;
  int iterations = 0;
  while (b - a > std::min(tol, 4.0 * std::numeric_limits<double>::epsilon() * b)) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    ++iterations;
    if (classify_shot(mid, r_max) == ShotOutcome::overshoot)
      b = mid;
    else
      a = mid;
  }
  const double amp = 0.5 * (a + b);

  // Final pass: record R and R' on the uniform node set, switching to the
  // exponential asymptote once the trajectory departs from the separatrix.
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-14, 1e-13,
                                      ode::runge_kutta_fehlberg78<OdeState>());
  RadialRhs rhs;

  RadialProfile p;
  p.r_max = r_max;
  p.method = RadialMethod::shooting;
  p.iterations = iterations;
  p.residual = b - a;
  const double h = r_max / (n_nodes - 1);
  p.nodes.resize(n_nodes);
  p.values.resize(n_nodes);
  p.deriv.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) p.nodes[i] = i * h;

  const double r0 = 1e-2;
  OdeState s = series_start(amp, r0);
  double r = r0;
  p.values[0] = amp;
  p.deriv[0] = 0.0;
  int tail_from = n_nodes;
  for (int i = 1; i < n_nodes; ++i) {
    const double target = p.nodes[i];
    if (target <= r0) {
      OdeState st = series_start(amp, target);
      p.values[i] = st[0];
      p.deriv[i] = st[1];
      continue;
    }
    ode::integrate_adaptive(stepper, rhs, s, r, target, (target - r) / 8.0);
    r = target;
    p.values[i] = s[0];
    p.deriv[i] = s[1];
    if (s[0] <= 0.0 || s[1] >= 0.0) {
      tail_from = i;
      break;
    }
  }
  if (tail_from < n_nodes) {
    // R ~ c e^{-r}/sqrt(r): continue the decay from the last good node.
    const int k = tail_from - 1;
    for (int i = tail_from; i < n_nodes; ++i) {
      const double ratio = std::exp(-(p.nodes[i] - p.nodes[k])) *
                           std::sqrt(p.nodes[k] / p.nodes[i]);
      p.values[i] = p.values[k] * ratio;
      p.deriv[i] = -p.values[i] * (1.0 + 0.5 / p.nodes[i]);
    }
  }
  p.values[n_nodes - 1] = 0.0;
  return p;
}

RadialDiagnostics radial_diagnostics(const RadialProfile& profile) {
  const int n = static_cast<int>(profile.values.size());
  if (n < 3)
    throw Error(Errc::invalid_argument, "radial_diagnostics: empty profile");
  const double h = profile.nodes[1] - profile.nodes[0];
  std::vector<double> r2(n), g2(n), r4(n);
  for (int i = 0; i < n; ++i) {
    r2[i] = profile.values[i] * profile.values[i];
    g2[i] = profile.deriv[i] * profile.deriv[i];
    r4[i] = r2[i] * r2[i];
  }
  RadialDiagnostics d;
  d.mass = 2.0 * M_PI * simpson_r(r2, h);
  d.grad_sq = 2.0 * M_PI * simpson_r(g2, h);
  d.l4_4 = 2.0 * M_PI * simpson_r(r4, h);
  d.energy = 0.5 * d.grad_sq - 0.25 * d.l4_4;
  return d;
}

void save_profile(const RadialProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::io, "save_profile: cannot open " + path);
  const char* method =
      profile.method == RadialMethod::renormalization ? "renormalization"
                                                      : "shooting";
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# L=%.17g N=%zu method=%s residual=%.17g\n",
                profile.r_max / 1.5, profile.values.size(), method,
                profile.residual);
  out << buf;
  for (size_t i = 0; i < profile.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", profile.nodes[i],
                  profile.values[i], profile.deriv[i]);
    out << buf;
  }
  if (!out)
    throw Error(Errc::io, "save_profile: write failed for " + path);
}

RadialProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::io, "load_profile: cannot open " + path);
  std::string header;
  std::getline(in, header);
  double L = 0.0, residual = 0.0;
  size_t n = 0;
  char method[32] = {0};
  if (std::sscanf(header.c_str(), "# L=%lg N=%zu method=%31s residual=%lg", &L,
                  &n, method, &residual) != 4)
    throw Error(Errc::io, "load_profile: malformed header in " + path);

  RadialProfile p;
  p.r_max = 1.5 * L;
  p.residual = residual;
  std::string m(method);
  if (m == "renormalization")
    p.method = RadialMethod::renormalization;
  else if (m == "shooting")
    p.method = RadialMethod::shooting;
  else
    throw Error(Errc::io, "load_profile: unknown method '" + m + "'");

  double r, v, d;
  while (in >> r >> v >> d) {
    p.nodes.push_back(r);
    p.values.push_back(v);
    p.deriv.push_back(d);
  }
  if (p.values.size() != n)
    throw Error(Errc::io, "load_profile: node count mismatch in " + path);
  return p;
}

} // namespace zk
