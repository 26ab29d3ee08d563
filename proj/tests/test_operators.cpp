#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "zkspec/operators.hpp"

namespace {

struct Setup {
  zk::RadialProfile profile;
  std::shared_ptr<zk::Grid1D> grid;
  zk::TensorField Q;
  Setup()
      : profile(zk::solve_radial(20.0, 2000, 1e-10, 500)),
        grid(std::make_shared<zk::Grid1D>(zk::map_grid(48, 20.0, 4.0))),
        Q(zk::radial_to_field(profile, grid)) {}
};

Setup& setup() {
  static Setup s;
  return s;
}

Eigen::MatrixXd x_parity_perm(int N) {
  const int m = N - 1;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m * m, m * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) P(j * m + i, j * m + (m - 1 - i)) = 1.0;
  return P;
}

double form_asymmetry(const zk::DiscreteOperator& op, const zk::Grid1D& grid,
                      const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const Eigen::VectorXd w2 = zk::interior_weights(grid);
  const double a = zk::inner_interior(op.matrix * u, v, w2);
  const double b = zk::inner_interior(u, op.matrix * v, w2);
  const double nu = std::sqrt(zk::inner_interior(u, u, w2));
  const double nv = std::sqrt(zk::inner_interior(v, v, w2));
  return std::abs(a - b) / (nu * nv);
}

} // namespace

TEST_CASE("laplacian on a Dirichlet eigenfunction") {
  auto& s = setup();
  const int N = s.grid->N, m = N - 1;
  const double L = s.grid->L;
  const Eigen::MatrixXd lap = zk::assemble_laplacian(*s.grid, 1.0, 1.0);
  Eigen::VectorXd u(m * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      u[j * m + i] = std::sin(M_PI * (s.grid->x[i + 1] + L) / (2.0 * L)) *
                     std::sin(M_PI * (s.grid->x[j + 1] + L) / (2.0 * L));
  const double mu = -2.0 * std::pow(M_PI / (2.0 * L), 2);
  CHECK((lap * u - mu * u).lpNorm<Eigen::Infinity>() <= 1e-4);
}

TEST_CASE("zero coefficients give the zero matrix") {
  auto& s = setup();
  CHECK(zk::assemble_laplacian(*s.grid, 0.0, 0.0).lpNorm<Eigen::Infinity>() ==
        0.0);
}

TEST_CASE("parity commutation at matrix level") {
  auto& s = setup();
  const Eigen::MatrixXd P = x_parity_perm(s.grid->N);
  for (const zk::DiscreteOperator& op :
       {zk::assemble_L(s.Q), zk::assemble_B2(s.Q), zk::assemble_M(s.Q)}) {
    const double c = (P * op.matrix - op.matrix * P).lpNorm<Eigen::Infinity>();
    CHECK(c <= 1e-12 * op.matrix.lpNorm<Eigen::Infinity>());
  }
}

TEST_CASE("operator identities at the ground state") {
  auto& s = setup();
  const zk::DiscreteOperator L = zk::assemble_L(s.Q);
  const Eigen::VectorXd w2 = zk::interior_weights(*s.grid);
  const zk::TensorField q3 = zk::multiply(zk::multiply(s.Q, s.Q), s.Q);
  const Eigen::VectorXd vq = zk::interior(s.Q), v3 = zk::interior(q3);
  auto wnorm = [&](const Eigen::VectorXd& v) {
    return std::sqrt(zk::inner_interior(v, v, w2));
  };
  CHECK(wnorm(L.matrix * vq + 2.0 * v3) <= 1e-4 * wnorm(v3));

  const zk::TensorField Qx = zk::dx(s.Q), Qy = zk::dy(s.Q);
  const Eigen::VectorXd vx = zk::interior(Qx);
  CHECK(wnorm(L.matrix * vx) <= 1e-3 * wnorm(vx));

  const Eigen::VectorXd vl = zk::interior(zk::lambda_q(s.Q, Qx, Qy));
  CHECK(wnorm(L.matrix * vl + 2.0 * vq) <= 1e-3 * wnorm(vq));
}

TEST_CASE("projection blocks have rank at most two") {
  auto& s = setup();
  const zk::TensorField Qx = zk::dx(s.Q);
  const double qn2 = zk::inner(s.Q, s.Q);
  zk::TensorField f = zk::scale_by_x(s.Q);
  f.values /= qn2;
  zk::TensorField g = zk::multiply(zk::multiply(s.Q, s.Q), Qx);
  g.values *= 6.0;

  for (bool sym : {true, false}) {
    const zk::DiscreteOperator P = zk::assemble_projection(f, g, sym);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(P.matrix);
    const auto& sv = svd.singularValues();
    CHECK(sv[2] <= 1e-10 * sv[0]);
    CHECK(P.symmetric_in_form == sym);
  }

  // rank-2 kernel: u orthogonal to f and g is annihilated
  const zk::DiscreteOperator P = zk::assemble_projection(f, g, true);
  const Eigen::VectorXd w2 = zk::interior_weights(*s.grid);
  const Eigen::VectorXd vf = zk::interior(f), vg = zk::interior(g);
  Eigen::VectorXd u = zk::interior(s.Q); // even in x, f and g odd
  CHECK(std::abs(zk::inner_interior(u, vf, w2)) < 1e-10);
  CHECK((P.matrix * u).lpNorm<Eigen::Infinity>() <=
        1e-10 * u.lpNorm<Eigen::Infinity>());
}

TEST_CASE("self-adjointness of the quadratic form on decaying fields") {
  auto& s = setup();
  const Eigen::VectorXd uq = zk::interior(s.Q);
  const Eigen::VectorXd ux = zk::interior(zk::dx(s.Q));
  const Eigen::VectorXd uxq = zk::interior(zk::scale_by_x(s.Q));
  CHECK(form_asymmetry(zk::assemble_L(s.Q), *s.grid, uq, ux) <= 1e-10);
  CHECK(form_asymmetry(zk::assemble_B2(s.Q), *s.grid, uq, ux) <= 1e-10);
  const zk::DiscreteOperator M = zk::assemble_M(s.Q);
  CHECK(form_asymmetry(M, *s.grid, uq, ux) <= 1e-10);
  CHECK(form_asymmetry(M, *s.grid, ux, uxq) <= 1e-10);
  // the rank-1 variant is genuinely non-self-adjoint on odd pairs
  const zk::DiscreteOperator Mbar = zk::assemble_Mbar(s.Q);
  CHECK(form_asymmetry(Mbar, *s.grid, ux, uxq) > 1e-4);
  CHECK_FALSE(Mbar.symmetric_in_form);
}

TEST_CASE("essential spectrum thresholds") {
  auto& s = setup();
  CHECK(zk::assemble_L(s.Q).ess_min == 1.0);
  CHECK(zk::assemble_B2(s.Q).ess_min == 1.0);
  CHECK(zk::assemble_M(s.Q).ess_min == 1.0);
}
