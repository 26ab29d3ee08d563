#include "zkspec/grid.hpp"

#include <cmath>

#include "zkspec/error.hpp"

namespace zk {

void cgl_grid(int N, Eigen::VectorXd& xi, Eigen::MatrixXd& D1_ref,
              Eigen::MatrixXd& D2_ref) {
  if (N < 4 || N % 2 != 0)
    throw Error(Errc::invalid_argument, "cgl_grid: N must be even and >= 4");

  const int n = N + 1;
  xi.resize(n);
  for (int i = 0; i < n; ++i) xi[i] = std::cos(i * M_PI / N);
  xi[N / 2] = 0.0; // exact center node

  Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  c[0] = 2.0;
  c[N] = 2.0;

  D1_ref.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      D1_ref(i, j) = (c[i] / c[j]) * sign / (xi[i] - xi[j]);
    }
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) s += D1_ref(i, j);
    D1_ref(i, i) = -s;
  }

  // D1*D1 with the diagonal recomputed by the same negative-sum trick.
  D2_ref = D1_ref * D1_ref;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) s += D2_ref(i, j);
    D2_ref(i, i) = -s;
  }
}

Eigen::VectorXd cgl_weights(const Eigen::VectorXd& xi) {
  const int n = static_cast<int>(xi.size());
  const int N = n - 1;
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) {
    double wi = (M_PI / N) * std::sqrt(std::max(0.0, 1.0 - xi[i] * xi[i]));
    if (i == 0 || i == N) wi *= 0.5;
    w[i] = wi;
  }
  return w;
}

Grid1D map_grid(int N, double L, double a) {
  if (L <= 0.0 || a <= 0.0)
    throw Error(Errc::invalid_argument, "map_grid: L and a must be positive");

  Grid1D g;
  g.N = N;
  g.L = L;
  g.a = a;

  Eigen::MatrixXd D1_ref, D2_ref;
  cgl_grid(N, g.xi, D1_ref, D2_ref);

  const int n = N + 1;
  const double sh = std::sinh(a);
  g.x.resize(n);
  g.x_xi.resize(n);
  g.x_xixi.resize(n);
  for (int i = 0; i < n; ++i) {
    g.x[i] = L * std::sinh(a * g.xi[i]) / sh;
    g.x_xi[i] = a * L * std::cosh(a * g.xi[i]) / sh;
    g.x_xixi[i] = a * a * g.x[i];
  }
  g.x[0] = L;
  g.x[N] = -L;

  const Eigen::VectorXd inv = g.x_xi.cwiseInverse();
  g.D1 = inv.asDiagonal() * D1_ref;
  g.D2 = inv.cwiseProduct(inv).asDiagonal() * D2_ref +
         ((D1_ref * inv).cwiseProduct(inv)).asDiagonal() * D1_ref;

  g.w = cgl_weights(g.xi).cwiseProduct(g.x_xi);
  return g;
}

Eigen::VectorXd quad_weights(const Grid1D& grid) {
  return cgl_weights(grid.xi).cwiseProduct(grid.x_xi);
}

} // namespace zk
