#include "zkspec/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "zkspec/error.hpp"
#include "zkspec/pchip.hpp"

namespace zk {

TensorField radial_to_field(const RadialProfile& profile,
                            std::shared_ptr<const Grid1D> grid) {
  if (!grid) throw Error(Errc::invalid_argument, "radial_to_field: null grid");
  if (profile.r_max < std::sqrt(2.0) * grid->L)
    throw Error(Errc::invalid_argument,
                "radial_to_field: profile does not cover the grid diagonal");

  Pchip interp(profile.nodes, profile.values);
  const int n = grid->N + 1;
  TensorField f;
  f.grid = grid;
  f.values.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double r = std::hypot(grid->x[i], grid->x[j]);
      if (r > profile.r_max)
        throw Error(Errc::invalid_argument,
                    "radial_to_field: radius exceeds profile domain");
      f.values(i, j) = interp(r);
    }
  }
  return f;
}

TensorField dx(const TensorField& f) {
  TensorField g;
  g.grid = f.grid;
  g.values = f.grid->D1 * f.values;
  return g;
}

TensorField dy(const TensorField& f) {
  TensorField g;
  g.grid = f.grid;
  g.values = f.values * f.grid->D1.transpose();
  return g;
}

TensorField lambda_q(const TensorField& f, const TensorField& fx,
                     const TensorField& fy) {
  if (f.grid != fx.grid || f.grid != fy.grid)
    throw Error(Errc::invalid_argument, "lambda_q: mismatched grids");
  const int n = f.grid->N + 1;
  TensorField g;
  g.grid = f.grid;
  g.values.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      g.values(i, j) = f.values(i, j) + f.grid->x[i] * fx.values(i, j) +
                       f.grid->x[j] * fy.values(i, j);
  return g;
}

TensorField pointwise(const TensorField& f,
                      const std::function<double(double)>& fn) {
  TensorField g;
  g.grid = f.grid;
  g.values = f.values.unaryExpr([&](double v) { return fn(v); });
  return g;
}

TensorField multiply(const TensorField& f, const TensorField& g) {
  if (f.grid != g.grid)
    throw Error(Errc::invalid_argument, "multiply: mismatched grids");
  TensorField h;
  h.grid = f.grid;
  h.values = f.values.cwiseProduct(g.values);
  return h;
}

TensorField scale_by_x(const TensorField& f) {
  TensorField g;
  g.grid = f.grid;
  g.values = f.grid->x.asDiagonal() * f.values;
  return g;
}

double inner(const TensorField& f, const TensorField& g) {
  if (f.grid != g.grid)
    throw Error(Errc::invalid_argument, "inner: mismatched grids");
  const Eigen::VectorXd& w = f.grid->w;
  return w.dot((f.values.cwiseProduct(g.values)) * w);
}

double norm_w(const TensorField& f) { return std::sqrt(inner(f, f)); }

Eigen::VectorXd interior(const TensorField& f) {
  const int m = f.grid->N - 1;
  Eigen::MatrixXd block = f.values.block(1, 1, m, m);
  return Eigen::Map<Eigen::VectorXd>(block.data(), m * m);
}

Eigen::VectorXd interior_weights(const Grid1D& grid) {
  const int m = grid.N - 1;
  Eigen::VectorXd w2(m * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      w2[j * m + i] = grid.w[i + 1] * grid.w[j + 1];
  return w2;
}

double inner_interior(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const Eigen::VectorXd& w2d) {
  return u.dot(w2d.cwiseProduct(v));
}

Eigen::VectorXd reverse_x(const Eigen::VectorXd& u, int N) {
  const int m = N - 1;
  Eigen::VectorXd r(u.size());
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      r[j * m + i] = u[j * m + (m - 1 - i)];
  return r;
}

void write_csv(const TensorField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "write_csv: cannot open " + path);
  const int n = f.grid->N + 1;
  char buf[64];
  for (int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), ",%.17g", f.grid->x[i]);
    out << buf;
  }
  out << "\n";
  for (int j = 0; j < n; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", f.grid->x[j]);
    out << buf;
    for (int i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof(buf), ",%.17g", f.values(i, j));
      out << buf;
    }
    out << "\n";
  }
  if (!out) throw Error(Errc::io, "write_csv: write failed for " + path);
}

} // namespace zk
