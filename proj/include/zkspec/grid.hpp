#ifndef ZKSPEC_GRID_HPP
#define ZKSPEC_GRID_HPP

#include <Eigen/Dense>

namespace zk {

/// Mapped Chebyshev-Gauss-Lobatto grid on [-L, L].
///
/// Reference nodes xi_i = cos(i*pi/N) on [-1,1] (descending) are pushed
/// through the stretching x(xi) = L*sinh(a*xi)/sinh(a), which concentrates
/// nodes near the origin.  D1/D2 are the mapped (chain-rule corrected)
/// differentiation matrices and w the mapped quadrature weights, so that
/// sum_i w_i f(x_i) approximates the integral of f over [-L, L].
struct Grid1D {
  int N = 0; // polynomial degree; N+1 nodes
  double L = 0.0;
  double a = 0.0;
  Eigen::VectorXd xi;
  Eigen::VectorXd x;
  Eigen::VectorXd x_xi;
  Eigen::VectorXd x_xixi;
  Eigen::VectorXd w;
  Eigen::MatrixXd D1;
  Eigen::MatrixXd D2;
};

/// Standard CGL nodes and differentiation matrices on [-1,1].  Diagonals use
/// the negative-sum trick; D2 is D1*D1 with its diagonal recomputed the same
/// way.  N must be even and >= 4.
void cgl_grid(int N, Eigen::VectorXd& xi, Eigen::MatrixXd& D1_ref,
              Eigen::MatrixXd& D2_ref);

/// Reference CGL quadrature weights (pi/N)*sqrt(1-xi^2), endpoints halved.
Eigen::VectorXd cgl_weights(const Eigen::VectorXd& xi);

/// Build the fully mapped grid (nodes, metric, weights, matrices).
Grid1D map_grid(int N, double L, double a);

/// Mapped quadrature weights of a grid (reference weights times dx/dxi).
Eigen::VectorXd quad_weights(const Grid1D& grid);

} // namespace zk

#endif
