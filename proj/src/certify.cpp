#include "zkspec/certify.hpp"

#include <cmath>

#include "lapack.hpp"
#include "zkspec/error.hpp"

namespace zk {

void fix_signs(std::vector<EigenPair>& pairs, const TensorField& Q,
               const TensorField& Qx) {
  const Eigen::VectorXd w2 = interior_weights(*Q.grid);
  const Eigen::VectorXd q = interior(Q);
  const Eigen::VectorXd qx = interior(Qx);
  for (auto& p : pairs) {
    const double aq = inner_interior(p.vector, q, w2);
    const double aqx = inner_interior(p.vector, qx, w2);
    const double lead = std::abs(aq) >= std::abs(aqx) ? aq : aqx;
    if (lead < 0.0) p.vector = -p.vector;
  }
}

Eigen::MatrixXd angles(const std::vector<EigenPair>& pairs,
                       const TensorField& Q, const TensorField& Qx) {
  const Eigen::VectorXd w2 = interior_weights(*Q.grid);
  Eigen::VectorXd q = interior(Q);
  Eigen::VectorXd qx = interior(Qx);
  q /= std::sqrt(inner_interior(q, q, w2));
  qx /= std::sqrt(inner_interior(qx, qx, w2));

  Eigen::MatrixXd A(2, pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k) {
    A(0, k) = std::abs(inner_interior(q, pairs[k].vector, w2));
    A(1, k) = std::abs(inner_interior(qx, pairs[k].vector, w2));
  }
  return A;
}

double angle_lemma_bound(double lambda1, double lambda_perp, double cos_beta) {
  if (!(lambda_perp > lambda1))
    throw Error(Errc::invalid_argument,
                "angle_lemma_bound: requires lambda_perp > lambda1");
  if (std::abs(cos_beta) > 1.0 + 1e-12)
    throw Error(Errc::invalid_argument, "angle_lemma_bound: |cos beta| > 1");
  const double c = std::min(1.0, std::abs(cos_beta));
  return lambda_perp - (lambda_perp - lambda1) * (1.0 - c * c);
}

Certification certify_coercivity(const TensorField& Q, const TensorField& Qx,
                                 const std::vector<EigenPair>& pairs,
                                 double cutoff) {
  const Eigen::VectorXd w2 = interior_weights(*Q.grid);
  Eigen::VectorXd q = interior(Q);
  Eigen::VectorXd qx = interior(Qx);
  q /= std::sqrt(inner_interior(q, q, w2));
  qx /= std::sqrt(inner_interior(qx, qx, w2));

  Certification cert;
  cert.odd_bound = cutoff;
  cert.even_bound = cutoff;
  int n_odd = 0, n_even = 0;
  for (const auto& p : pairs) {
    if (p.parity == Parity::mixed)
      throw Error(Errc::not_certified,
                  "certify_coercivity: mixed-parity eigenfunction");
    // Odd subspace pairs with Q_x, even with Q.
    const Eigen::VectorXd& ref = (p.parity == Parity::odd_x) ? qx : q;
    const double cb = std::abs(inner_interior(p.vector, ref, w2));
    const double bound = angle_lemma_bound(p.value, cutoff, cb);
    if (p.parity == Parity::odd_x) {
      cert.odd_bound = std::min(cert.odd_bound, bound);
      ++n_odd;
    } else {
      cert.even_bound = std::min(cert.even_bound, bound);
      ++n_even;
    }
  }
  if (n_odd > 1 || n_even > 1) {
    cert.flagged = true;
    cert.flag_reason =
        "more than one sub-cutoff eigenvalue in a parity class; the angle "
        "lemma handles one per class";
  }
  cert.overall = std::min(cert.odd_bound, cert.even_bound);
  cert.positive = !cert.flagged && cert.overall > 0.0;
  return cert;
}

double constrained_rayleigh_min(const DiscreteOperator& op, const Grid1D& grid,
                                const std::vector<TensorField>& constraints) {
  if (!op.symmetric_in_form)
    throw Error(Errc::invalid_argument,
                "constrained_rayleigh_min: operator must be symmetric in form");
  const Eigen::VectorXd w2 = interior_weights(grid);
  const Eigen::VectorXd s = w2.cwiseSqrt();
  const Eigen::VectorXd si = s.cwiseInverse();
  const int n = static_cast<int>(op.matrix.rows());
  const int m = static_cast<int>(constraints.size());
  if (m >= n)
    throw Error(Errc::rank_deficient,
                "constrained_rayleigh_min: constraint set exhausts the space");

  Eigen::MatrixXd S =
      s.asDiagonal() * op.matrix * si.asDiagonal();
  S = 0.5 * (S + S.transpose()).eval();

  if (m == 0) {
    Eigen::VectorXd evals;
    lapack::syev(S, evals);
    return evals[0];
  }

  // Orthonormalize the weighted constraint vectors, with a rank check.
  Eigen::MatrixXd C(n, m);
  for (int k = 0; k < m; ++k)
    C.col(k) = s.cwiseProduct(interior(constraints[k]));
  for (int k = 0; k < m; ++k) {
    const double orig = C.col(k).norm();
    for (int l = 0; l < k; ++l) C.col(k) -= C.col(l).dot(C.col(k)) * C.col(l);
    const double nrm = C.col(k).norm();
    if (!(nrm > 1e-10 * orig) || orig == 0.0)
      throw Error(Errc::rank_deficient,
                  "constrained_rayleigh_min: constraints are linearly "
                  "dependent in the weighted inner product");
    C.col(k) /= nrm;
  }

  // Complete to an orthonormal basis; eigensolve on the complement.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(C);
  Eigen::MatrixXd Qfull = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd Qc = Qfull.rightCols(n - m);
  Eigen::MatrixXd B = Qc.transpose() * S * Qc;
  B = 0.5 * (B + B.transpose()).eval();
  Eigen::VectorXd evals;
  lapack::syev(B, evals);
  return evals[0];
}

} // namespace zk
