#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zkspec/error.hpp"
#include "zkspec/grid.hpp"

using zk::Grid1D;

TEST_CASE("cgl nodes at N=4") {
  Eigen::VectorXd xi;
  Eigen::MatrixXd D1, D2;
  zk::cgl_grid(4, xi, D1, D2);
  const double s = std::sqrt(2.0) / 2.0;
  const double expect[5] = {1.0, s, 0.0, -s, -1.0};
  for (int i = 0; i < 5; ++i) CHECK(xi[i] == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("reference differentiation is exact on low-degree polynomials") {
  Eigen::VectorXd xi;
  Eigen::MatrixXd D1, D2;
  zk::cgl_grid(16, xi, D1, D2);
  const Eigen::VectorXd dxi = D1 * xi;
  const Eigen::VectorXd dxi2 = D1 * xi.cwiseProduct(xi);
  for (int i = 0; i <= 16; ++i) {
    CHECK(std::abs(dxi[i] - 1.0) < 1e-12);
    CHECK(std::abs(dxi2[i] - 2.0 * xi[i]) < 1e-11);
  }
  const Eigen::VectorXd c = Eigen::VectorXd::Ones(17);
  CHECK((D1 * c).lpNorm<Eigen::Infinity>() <
        1e-10 * D1.lpNorm<Eigen::Infinity>());
}

TEST_CASE("odd or tiny N rejected") {
  Eigen::VectorXd xi;
  Eigen::MatrixXd D1, D2;
  CHECK_THROWS_AS(zk::cgl_grid(5, xi, D1, D2), zk::Error);
  CHECK_THROWS_AS(zk::cgl_grid(2, xi, D1, D2), zk::Error);
}

TEST_CASE("mapping endpoints, symmetry and metric") {
  const Grid1D g = zk::map_grid(48, 20.0, 4.0);
  CHECK(g.x[0] == doctest::Approx(20.0).epsilon(1e-13));
  CHECK(g.x[48] == doctest::Approx(-20.0).epsilon(1e-13));
  CHECK(g.x[24] == doctest::Approx(0.0).epsilon(1e-14));
  for (int i = 0; i <= 48; ++i) {
    CHECK(g.x[i] == doctest::Approx(-g.x[48 - i]).epsilon(1e-12));
    CHECK(g.x_xi[i] > 0.0);
  }
  // analytic dx/dxi at the origin: 2aL/(e^a - e^-a)
  const double expect = 2.0 * 4.0 * 20.0 / (std::exp(4.0) - std::exp(-4.0));
  CHECK(g.x_xi[24] == doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(2.9317).epsilon(1e-4));
}

TEST_CASE("quadrature weights") {
  const Grid1D g = zk::map_grid(48, 20.0, 4.0);
  CHECK(g.w[0] == 0.0);
  CHECK(g.w[48] == 0.0);
  CHECK(g.w.minCoeff() >= 0.0);
  // the sine-weight rule is O(N^-2) for the constant: ~1.4e-3 relative here
  CHECK(std::abs(g.w.sum() - 40.0) < 1e-2 * 40.0);
  double gauss = 0.0;
  for (int i = 0; i <= 48; ++i) gauss += g.w[i] * std::exp(-g.x[i] * g.x[i]);
  CHECK(std::abs(gauss - std::sqrt(M_PI)) < 1e-6);
}

TEST_CASE("mapped derivative of sin(x) converges spectrally") {
  auto sin_err = [](int N) {
    const Grid1D g = zk::map_grid(N, 20.0, 4.0);
    const Eigen::VectorXd d = g.D1 * g.x.array().sin().matrix();
    double err = 0.0;
    for (int i = 0; i <= N; ++i)
      if (std::abs(g.x[i]) <= 10.0)
        err = std::max(err, std::abs(d[i] - std::cos(g.x[i])));
    return err;
  };
  // ~13 periods across [-20,20]: marginally resolved at N=48, exact at N=96
  CHECK(sin_err(48) < 2e-3);
  CHECK(sin_err(96) < 1e-10);
}

TEST_CASE("parity structure of D1 and D2") {
  const int N = 32;
  const Grid1D g = zk::map_grid(N, 20.0, 4.0);
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) R(i, N - i) = 1.0;
  CHECK((R * g.D1 * R + g.D1).lpNorm<Eigen::Infinity>() <
        1e-10 * g.D1.lpNorm<Eigen::Infinity>());
  CHECK((R * g.D2 * R - g.D2).lpNorm<Eigen::Infinity>() <
        1e-10 * g.D2.lpNorm<Eigen::Infinity>());
}

TEST_CASE("discrete integration by parts on Gaussians") {
  const Grid1D g = zk::map_grid(48, 20.0, 4.0);
  Eigen::VectorXd f(49), h(49);
  for (int i = 0; i <= 48; ++i) {
    f[i] = std::exp(-g.x[i] * g.x[i]);
    h[i] = g.x[i] * std::exp(-0.5 * g.x[i] * g.x[i]);
  }
  const Eigen::VectorXd df = g.D1 * f, dh = g.D1 * h;
  double s = 0.0, nf = 0.0, nh = 0.0;
  for (int i = 0; i <= 48; ++i) {
    s += g.w[i] * (df[i] * h[i] + f[i] * dh[i]);
    nf += g.w[i] * f[i] * f[i];
    nh += g.w[i] * h[i] * h[i];
  }
  CHECK(std::abs(s) < 1e-6 * std::sqrt(nf * nh));
}
