#ifndef ZKSPEC_CERTIFY_HPP
#define ZKSPEC_CERTIFY_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zkspec/eigensolve.hpp"

namespace zk {

/// Fix eigenfunction signs so the largest-|.| inner product with {Q, Q_x}
/// is nonnegative.
void fix_signs(std::vector<EigenPair>& pairs, const TensorField& Q,
               const TensorField& Qx);

/// 2 x k matrix of absolute weighted inner products; row 0 against Q/||Q||,
/// row 1 against Q_x/||Q_x||.
Eigen::MatrixXd angles(const std::vector<EigenPair>& pairs,
                       const TensorField& Q, const TensorField& Qx);

/// lambda_perp - (lambda_perp - lambda1) * sin^2(beta).
double angle_lemma_bound(double lambda1, double lambda_perp, double cos_beta);

struct Certification {
  double odd_bound = 0.0;
  double even_bound = 0.0;
  double overall = 0.0;
  bool positive = false;
  bool flagged = false; // more than one sub-cutoff eigenvalue in a parity class
  std::string flag_reason;
};

/// Per parity subspace, pair the sub-cutoff eigenvalue with its constraint
/// function (odd: Q_x, even: Q) and apply the angle lemma with
/// lambda_perp = cutoff; a parity class with no eigenvalue contributes the
/// cutoff itself.  Throws on a mixed-parity eigenfunction.
Certification certify_coercivity(const TensorField& Q, const TensorField& Qx,
                                 const std::vector<EigenPair>& pairs,
                                 double cutoff);

/// Minimum of <Au,u>_w / <u,u>_w over the weighted-orthogonal complement of
/// the constraint set, via deflation and a dense eigensolve of the projected
/// operator.  Requires a symmetric-in-form operator and a full-rank,
/// non-exhaustive constraint set.
double constrained_rayleigh_min(const DiscreteOperator& op, const Grid1D& grid,
                                const std::vector<TensorField>& constraints);

} // namespace zk

#endif
