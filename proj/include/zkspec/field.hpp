#ifndef ZKSPEC_FIELD_HPP
#define ZKSPEC_FIELD_HPP

#include <functional>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "zkspec/grid.hpp"
#include "zkspec/radial.hpp"

namespace zk {

/// Scalar field sampled on the 2D tensor grid (same Grid1D for x and y).
/// values(i,j) = f(x_i, y_j).
///
/// Flattening convention (fixed, global): interior nodes only
/// (i, j = 1..N-1), column-major with the x-index i varying fastest, i.e.
/// vec index k = (j-1)*(N-1) + (i-1).  All matrix assembly in the operators
/// module depends on this.
struct TensorField {
  std::shared_ptr<const Grid1D> grid;
  Eigen::MatrixXd values;
};

/// Interpolate a radial profile onto the tensor grid via shape-preserving
/// cubic Hermite interpolation at r = sqrt(x_i^2 + y_j^2).
TensorField radial_to_field(const RadialProfile& profile,
                            std::shared_ptr<const Grid1D> grid);

/// Spectral partial derivatives (mapped D1 along the x- resp. y-index).
TensorField dx(const TensorField& f);
TensorField dy(const TensorField& f);

/// Scaling generator: (Lambda f)(x,y) = f + x f_x + y f_y.
TensorField lambda_q(const TensorField& f, const TensorField& fx,
                     const TensorField& fy);

/// Pointwise helpers returning a new field on the same grid.
TensorField pointwise(const TensorField& f,
                      const std::function<double(double)>& fn);
TensorField multiply(const TensorField& f, const TensorField& g);
TensorField scale_by_x(const TensorField& f); // x * f(x,y)

/// Discrete weighted inner product <f,g>_w = sum_ij w_i w_j f_ij g_ij.
double inner(const TensorField& f, const TensorField& g);
double norm_w(const TensorField& f);

/// Interior-node flattening per the convention above.
Eigen::VectorXd interior(const TensorField& f);

/// Outer-product 2D weights restricted to interior nodes, same flattening.
Eigen::VectorXd interior_weights(const Grid1D& grid);

/// Weighted inner product of two interior vectors.
double inner_interior(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                      const Eigen::VectorXd& w2d);

/// Node-reversal i -> N-i in the x index, acting on interior vectors.
Eigen::VectorXd reverse_x(const Eigen::VectorXd& u, int N);

/// CSV export: first row x-nodes, first column y-nodes, body = values.
void write_csv(const TensorField& f, const std::string& path);

} // namespace zk

#endif
