#ifndef ZKSPEC_EIGENSOLVE_HPP
#define ZKSPEC_EIGENSOLVE_HPP

#include <vector>

#include <Eigen/Dense>

#include "zkspec/operators.hpp"

namespace zk {

enum class Parity { even_x, odd_x, mixed };

const char* parity_name(Parity p);

/// Eigenpair of a discrete operator.  vector is an interior-node vector in
/// the original (unweighted) coordinates with ||.||_w = 1; residual is
/// measured on the solved (weighted-similarity, symmetrized when applicable)
/// matrix.  near_zero tags members of the numerically degenerate kernel of L.
struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  Parity parity = Parity::mixed;
  bool near_zero = false;
};

/// All discrete eigenvalues strictly below cutoff, ascending, at most max_k.
/// Solves the similarity transform S = diag(sqrt(w)) A diag(1/sqrt(w)),
/// symmetrized when the operator is self-adjoint in form, via a full dense
/// eigendecomposition; otherwise a general (nonsymmetric) eigensolve.
std::vector<EigenPair> eig_below(const DiscreteOperator& op, const Grid1D& grid,
                                 double cutoff, int max_k = 16);

Parity parity_classify(const Eigen::VectorXd& vector, const Grid1D& grid,
                       double tol = 1e-6);

} // namespace zk

#endif
