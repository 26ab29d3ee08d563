#ifndef ZKSPEC_OPERATORS_HPP
#define ZKSPEC_OPERATORS_HPP

#include <string>

#include <Eigen/Dense>

#include "zkspec/field.hpp"

namespace zk {

enum class OpLabel { L_op, B2, P2, P2bar, M, Mbar };

const char* op_label_name(OpLabel label);

/// Dense interior-node matrix with homogeneous Dirichlet boundary conditions
/// (boundary rows/columns deleted), n = (N-1)^2.
///
/// symmetric_in_form is true when the underlying continuous operator is
/// self-adjoint; the raw matrix is then similar to a symmetric one via
/// diag(sqrt(w2d)), not entrywise symmetric.  ess_min is the infimum of the
/// continuous essential spectrum (1 for L and for M = 2(B+P)).
struct DiscreteOperator {
  Eigen::MatrixXd matrix;
  OpLabel label = OpLabel::L_op;
  bool symmetric_in_form = true;
  double ess_min = 1.0;
  int N = 0;
};

/// cx*Dxx + cy*Dyy on interior nodes under the fixed flattening convention
/// (x-index fastest).
Eigen::MatrixXd assemble_laplacian(const Grid1D& grid, double cx, double cy);

/// L = -Lap + 1 - 3Q^2.
DiscreteOperator assemble_L(const TensorField& Q);

/// 2B = -3 Dxx - Dyy + 1 - 3Q^2 - 6 x Q Q_x   (Q_x spectral).
DiscreteOperator assemble_B2(const TensorField& Q);

/// Rank-1 quadrature discretization of u -> <u,f>_w g, i.e. the matrix
/// vec(g) * (w2d .* vec(f))^T; the self-adjoint variant averages it with the
/// (g,f) swap and has rank <= 2.
DiscreteOperator assemble_projection(const TensorField& f, const TensorField& g,
                                     bool self_adjoint);

/// M = 2(B+P) = 2B + [K(xQ/|Q|^2, 6Q^2Q_x) + K(6Q^2Q_x, xQ/|Q|^2)] with
/// K the rank-1 matrix above.  ess_min = 1.
DiscreteOperator assemble_M(const TensorField& Q);

/// Non-self-adjoint variant 2B + 2Pbar with 2Pbar rank 1; its quadratic form
/// matches the self-adjoint 2P, its matrix does not.
DiscreteOperator assemble_Mbar(const TensorField& Q);

/// Binary dump: 16-byte header (two 64-bit dims), then row-major doubles.
void write_matrix(const Eigen::MatrixXd& m, const std::string& path);

} // namespace zk

#endif
