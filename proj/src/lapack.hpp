#ifndef ZKSPEC_SRC_LAPACK_HPP
#define ZKSPEC_SRC_LAPACK_HPP

#include <Eigen/Dense>

namespace zk::lapack {

/// Dense symmetric eigendecomposition (ascending).  A is overwritten with
/// the orthonormal eigenvectors (one per column).
void syev(Eigen::MatrixXd& A, Eigen::VectorXd& evals);

/// General dense eigendecomposition: eigenvalues and right eigenvectors.
void geev(Eigen::MatrixXd A, Eigen::VectorXcd& evals, Eigen::MatrixXcd& evecs);

} // namespace zk::lapack

#endif
