#include "lapack.hpp"

#include <lapacke.h>

#include "zkspec/error.hpp"

namespace zk::lapack {

void syev(Eigen::MatrixXd& A, Eigen::VectorXd& evals) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  evals.resize(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                         A.data(), n, evals.data());
  if (info != 0)
    throw Error(Errc::eigensolver,
                "dsyevd failed with info=" + std::to_string(info));
}

void geev(Eigen::MatrixXd A, Eigen::VectorXcd& evals, Eigen::MatrixXcd& evecs) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  Eigen::VectorXd wr(n), wi(n);
  Eigen::MatrixXd vr(n, n);
  const lapack_int info =
      LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, A.data(), n, wr.data(),
                    wi.data(), nullptr, 1, vr.data(), n);
  if (info != 0)
    throw Error(Errc::eigensolver,
                "dgeev failed with info=" + std::to_string(info));

  evals.resize(n);
  evecs.resize(n, n);
  const std::complex<double> I(0.0, 1.0);
  lapack_int j = 0;
  while (j < n) {
    evals[j] = {wr[j], wi[j]};
    if (wi[j] != 0.0 && j + 1 < n) {
      // conjugate pair stored as real/imag parts in adjacent columns
      evals[j + 1] = {wr[j + 1], wi[j + 1]};
      evecs.col(j) = vr.col(j).cast<std::complex<double>>() + I * vr.col(j + 1);
      evecs.col(j + 1) = evecs.col(j).conjugate();
      j += 2;
    } else {
      evecs.col(j) = vr.col(j).cast<std::complex<double>>();
      j += 1;
    }
  }
}

} // namespace zk::lapack
