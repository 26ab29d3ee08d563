#include "zkspec/eigensolve.hpp"

#include <algorithm>
#include <cmath>

#include "lapack.hpp"
#include "zkspec/error.hpp"
#include "zkspec/field.hpp"

namespace zk {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even_x: return "even_x";
    case Parity::odd_x: return "odd_x";
    case Parity::mixed: return "mixed";
  }
  return "?";
}

Parity parity_classify(const Eigen::VectorXd& vector, const Grid1D& grid,
                       double tol) {
  const Eigen::VectorXd w2 = interior_weights(grid);
  const Eigen::VectorXd rev = reverse_x(vector, grid.N);
  const Eigen::VectorXd odd = 0.5 * (vector - rev);
  const Eigen::VectorXd even = 0.5 * (vector + rev);
  const double no = std::sqrt(inner_interior(odd, odd, w2));
  const double ne = std::sqrt(inner_interior(even, even, w2));
  if (no <= tol) return Parity::even_x;
  if (ne <= tol) return Parity::odd_x;
  return Parity::mixed;
}

std::vector<EigenPair> eig_below(const DiscreteOperator& op, const Grid1D& grid,
                                 double cutoff, int max_k) {
  if (cutoff > op.ess_min + 1e-12)
    throw Error(Errc::invalid_argument,
                "eig_below: cutoff above the essential spectrum threshold");
  if (op.N != grid.N)
    throw Error(Errc::invalid_argument, "eig_below: grid/operator mismatch");

  const Eigen::VectorXd w2 = interior_weights(grid);
  const Eigen::VectorXd s = w2.cwiseSqrt();
  const Eigen::VectorXd si = s.cwiseInverse();
  Eigen::MatrixXd S = s.asDiagonal() * op.matrix * si.asDiagonal();

  std::vector<EigenPair> out;
  if (op.symmetric_in_form) {
    S = 0.5 * (S + S.transpose()).eval();
    const Eigen::MatrixXd Ssym = S;
    Eigen::VectorXd evals;
    lapack::syev(S, evals); // S now holds eigenvectors
    std::vector<Eigen::VectorXd> us;
    for (int k = 0; k < evals.size() && static_cast<int>(out.size()) < max_k;
         ++k) {
      if (evals[k] >= cutoff) break;
      EigenPair p;
      p.value = evals[k];
      const Eigen::VectorXd u = S.col(k);
      p.residual = (Ssym * u - p.value * u).norm();
      p.vector = si.cwiseProduct(u);
      us.push_back(u);
      out.push_back(std::move(p));
    }
    // Degenerate clusters come back as arbitrary rotations; split them into
    // even/odd x-parity combinations (reflection commutes with the operator
    // and with the weight, so this stays an orthonormal eigenbasis).
    size_t lo = 0;
    while (lo < out.size()) {
      size_t hi = lo + 1;
      while (hi < out.size() &&
             std::abs(out[hi].value - out[hi - 1].value) <=
                 1e-8 * (1.0 + std::abs(out[hi].value)))
        ++hi;
      if (hi - lo > 1) {
        const int m = grid.N - 1;
        const int c = static_cast<int>(hi - lo);
        Eigen::MatrixXd even(m * m, c), odd(m * m, c);
        for (int j = 0; j < c; ++j) {
          const Eigen::VectorXd rev = reverse_x(us[lo + j], grid.N);
          even.col(j) = 0.5 * (us[lo + j] + rev);
          odd.col(j) = 0.5 * (us[lo + j] - rev);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> sve(even, Eigen::ComputeThinU);
        Eigen::JacobiSVD<Eigen::MatrixXd> svo(odd, Eigen::ComputeThinU);
        int j = 0;
        for (int k = 0; k < c && j < c; ++k)
          if (sve.singularValues()[k] > 1e-6)
            us[lo + j++] = sve.matrixU().col(k);
        for (int k = 0; k < c && j < c; ++k)
          if (svo.singularValues()[k] > 1e-6)
            us[lo + j++] = svo.matrixU().col(k);
        for (size_t k = lo; j == c && k < hi; ++k) {
          auto& p = out[k];
          p.residual = (Ssym * us[k] - p.value * us[k]).norm();
          p.vector = si.cwiseProduct(us[k]);
        }
      }
      lo = hi;
    }
  } else {
    Eigen::VectorXcd evals;
    Eigen::MatrixXcd evecs;
    lapack::geev(S, evals, evecs);
    std::vector<int> idx(evals.size());
    for (int k = 0; k < evals.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return evals[a].real() < evals[b].real();
    });
    for (int k : idx) {
      if (evals[k].real() >= cutoff) break;
      if (static_cast<int>(out.size()) >= max_k) break;
      if (std::abs(evals[k].imag()) > 1e-8 * (1.0 + std::abs(evals[k].real())))
        throw Error(Errc::eigensolver,
                    "eig_below: complex eigenvalue below cutoff");
      EigenPair p;
      p.value = evals[k].real();
      Eigen::VectorXd u = evecs.col(k).real();
      u /= u.norm();
      p.residual = (S * u - p.value * u).norm();
      p.vector = si.cwiseProduct(u);
      out.push_back(std::move(p));
    }
  }

  for (auto& p : out) {
    p.parity = parity_classify(p.vector, grid);
    p.near_zero = (op.label == OpLabel::L_op) && std::abs(p.value) <= 1e-3;
  }
  return out;
}

} // namespace zk
