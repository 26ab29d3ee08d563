#include "zkspec/operators.hpp"

#include <cstdint>
#include <fstream>

#include "zkspec/error.hpp"

namespace zk {

const char* op_label_name(OpLabel label) {
  switch (label) {
    case OpLabel::L_op: return "L";
    case OpLabel::B2: return "B2";
    case OpLabel::P2: return "P2";
    case OpLabel::P2bar: return "P2bar";
    case OpLabel::M: return "M";
    case OpLabel::Mbar: return "Mbar";
  }
  return "?";
}

Eigen::MatrixXd assemble_laplacian(const Grid1D& grid, double cx, double cy) {
  const int m = grid.N - 1;
  const int n = m * m;
  const Eigen::MatrixXd D2i = grid.D2.block(1, 1, m, m);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  // x-index fastest: cx acts block-diagonally, cy couples equal x-indices.
  if (cx != 0.0)
    for (int jb = 0; jb < m; ++jb)
      A.block(jb * m, jb * m, m, m) += cx * D2i;
  if (cy != 0.0)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        const double v = cy * D2i(j, l);
        for (int i = 0; i < m; ++i) A(j * m + i, l * m + i) += v;
      }
  return A;
}

namespace {

Eigen::VectorXd interior_x(const Grid1D& grid) {
  const int m = grid.N - 1;
  Eigen::VectorXd xv(m * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) xv[j * m + i] = grid.x[i + 1];
  return xv;
}

} // namespace

DiscreteOperator assemble_L(const TensorField& Q) {
  const Grid1D& g = *Q.grid;
  DiscreteOperator op;
  op.label = OpLabel::L_op;
  op.symmetric_in_form = true;
  op.ess_min = 1.0;
  op.N = g.N;
  op.matrix = -assemble_laplacian(g, 1.0, 1.0);
  const Eigen::VectorXd q = interior(Q);
  op.matrix.diagonal() += (1.0 - 3.0 * q.array().square()).matrix();
  return op;
}

DiscreteOperator assemble_B2(const TensorField& Q) {
  const Grid1D& g = *Q.grid;
  DiscreteOperator op;
  op.label = OpLabel::B2;
  op.symmetric_in_form = true;
  op.ess_min = 1.0;
  op.N = g.N;
  op.matrix = assemble_laplacian(g, -3.0, -1.0);
  const Eigen::VectorXd q = interior(Q);
  const Eigen::VectorXd qx = interior(dx(Q));
  const Eigen::VectorXd xv = interior_x(g);
  op.matrix.diagonal() += (1.0 - 3.0 * q.array().square() -
                           6.0 * xv.array() * q.array() * qx.array())
                              .matrix();
  return op;
}

DiscreteOperator assemble_projection(const TensorField& f, const TensorField& g,
                                     bool self_adjoint) {
  if (f.grid != g.grid)
    throw Error(Errc::invalid_argument, "assemble_projection: mismatched grids");
  const Eigen::VectorXd w2 = interior_weights(*f.grid);
  const Eigen::VectorXd fv = interior(f);
  const Eigen::VectorXd gv = interior(g);

  DiscreteOperator op;
  op.label = self_adjoint ? OpLabel::P2 : OpLabel::P2bar;
  op.symmetric_in_form = self_adjoint;
  op.ess_min = 0.0;
  op.N = f.grid->N;
  if (self_adjoint) {
    op.matrix = 0.5 * (gv * w2.cwiseProduct(fv).transpose() +
                       fv * w2.cwiseProduct(gv).transpose());
  } else {
    op.matrix = gv * w2.cwiseProduct(fv).transpose();
  }
  return op;
}

namespace {

// The two functions entering the virial projection: f = xQ/<Q,Q>_w and
// g = 6 Q^2 Q_x (spectral Q_x), both odd in x.
void virial_projection_parts(const TensorField& Q, TensorField& f,
                             TensorField& g) {
  const double m2 = inner(Q, Q);
  f = scale_by_x(Q);
  f.values /= m2;
  const TensorField Qx = dx(Q);
  g = multiply(multiply(Q, Q), Qx);
  g.values *= 6.0;
}

} // namespace

DiscreteOperator assemble_M(const TensorField& Q) {
  TensorField f, g;
  virial_projection_parts(Q, f, g);
  DiscreteOperator op = assemble_B2(Q);
  // M = 2B + 2P with 2P = K(f,g) + K(g,f), K the rank-1 quadrature matrix.
  op.matrix += 2.0 * assemble_projection(f, g, true).matrix;
  op.label = OpLabel::M;
  op.ess_min = 1.0;
  return op;
}

DiscreteOperator assemble_Mbar(const TensorField& Q) {
  TensorField f, g;
  virial_projection_parts(Q, f, g);
  DiscreteOperator op = assemble_B2(Q);
  // One-sided rank-1 form with the same quadratic form as the 2P above.
  op.matrix += 2.0 * assemble_projection(f, g, false).matrix;
  op.label = OpLabel::Mbar;
  op.symmetric_in_form = false;
  op.ess_min = 1.0;
  return op;
}

void write_matrix(const Eigen::MatrixXd& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "write_matrix: cannot open " + path);
  const std::uint64_t dims[2] = {static_cast<std::uint64_t>(m.rows()),
                                 static_cast<std::uint64_t>(m.cols())};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  // row-major on disk
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      out.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }
  if (!out) throw Error(Errc::io, "write_matrix: write failed for " + path);
}

} // namespace zk
