#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zkspec/certify.hpp"
#include "zkspec/error.hpp"

namespace {

struct Setup {
  zk::RadialProfile profile;
  std::shared_ptr<zk::Grid1D> grid;
  zk::TensorField Q, Qx;
  Setup()
      : profile(zk::solve_radial(20.0, 2000, 1e-10, 500)),
        grid(std::make_shared<zk::Grid1D>(zk::map_grid(32, 20.0, 4.0))),
        Q(zk::radial_to_field(profile, grid)),
        Qx(zk::dx(Q)) {}
};

Setup& setup() {
  static Setup s;
  return s;
}

zk::EigenPair normalized_pair(double value, Eigen::VectorXd v,
                              const zk::Grid1D& grid) {
  const Eigen::VectorXd w2 = zk::interior_weights(grid);
  v /= std::sqrt(zk::inner_interior(v, v, w2));
  zk::EigenPair p;
  p.value = value;
  p.vector = v;
  p.parity = zk::parity_classify(v, grid);
  return p;
}

} // namespace

TEST_CASE("angle lemma arithmetic") {
  CHECK(zk::angle_lemma_bound(-0.5368, 0.5, 0.8739) ==
        doctest::Approx(0.2550).epsilon(2e-3));
  CHECK(zk::angle_lemma_bound(-0.1075, 0.5, 0.9902) ==
        doctest::Approx(0.4882).epsilon(2e-3));
  // aligned constraint removes the negative mode; orthogonal leaves it
  CHECK(zk::angle_lemma_bound(-0.3, 0.5, 1.0) == doctest::Approx(0.5));
  CHECK(zk::angle_lemma_bound(-0.3, 0.5, 0.0) == doctest::Approx(-0.3));
  CHECK_THROWS_AS(zk::angle_lemma_bound(0.7, 0.5, 0.5), zk::Error);
  CHECK_THROWS_AS(zk::angle_lemma_bound(-0.3, 0.5, 1.5), zk::Error);
}

TEST_CASE("angles against the reference pair") {
  auto& s = setup();
  std::vector<zk::EigenPair> pairs = {
      normalized_pair(-0.1, zk::interior(s.Q), *s.grid),
      normalized_pair(-0.2, zk::interior(s.Qx), *s.grid)};
  const Eigen::MatrixXd A = zk::angles(pairs, s.Q, s.Qx);
  CHECK(A(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(A(1, 1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(A(1, 0) <= 1e-10); // odd/even structural zeros
  CHECK(A(0, 1) <= 1e-10);
  CHECK(A.minCoeff() >= 0.0);
  CHECK(A.maxCoeff() <= 1.0 + 1e-12);
}

TEST_CASE("certification on synthetic pairs") {
  auto& s = setup();
  const Eigen::VectorXd w2 = zk::interior_weights(*s.grid);
  const zk::EigenPair even = normalized_pair(-0.1075, zk::interior(s.Q), *s.grid);
  const zk::EigenPair odd = normalized_pair(-0.5368, zk::interior(s.Qx), *s.grid);

  // cos(beta) = 1 in each class: the constraint removes the negative mode
  zk::Certification c = zk::certify_coercivity(s.Q, s.Qx, {odd, even}, 0.5);
  CHECK(c.odd_bound == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(c.even_bound == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(c.positive);

  // an even eigenfunction orthogonal to Q keeps its negative eigenvalue
  const zk::TensorField q3 = zk::multiply(zk::multiply(s.Q, s.Q), s.Q);
  Eigen::VectorXd vq = zk::interior(s.Q);
  vq /= std::sqrt(zk::inner_interior(vq, vq, w2));
  Eigen::VectorXd perp = zk::interior(q3);
  perp -= zk::inner_interior(perp, vq, w2) * vq;
  const zk::EigenPair bad = normalized_pair(-0.1075, perp, *s.grid);
  c = zk::certify_coercivity(s.Q, s.Qx, {bad}, 0.5);
  CHECK(c.even_bound == doctest::Approx(-0.1075).epsilon(1e-8));
  CHECK(c.overall == doctest::Approx(-0.1075).epsilon(1e-8));
  CHECK_FALSE(c.positive);

  // sign flip leaves the bounds unchanged
  zk::EigenPair flipped = bad;
  flipped.vector = -flipped.vector;
  const zk::Certification c2 = zk::certify_coercivity(s.Q, s.Qx, {flipped}, 0.5);
  CHECK(c2.overall == doctest::Approx(c.overall).epsilon(1e-12));

  // empty spectrum below the cutoff: bound is the cutoff itself
  c = zk::certify_coercivity(s.Q, s.Qx, {}, 0.5);
  CHECK(c.overall == doctest::Approx(0.5));
  CHECK(c.positive);

  // two eigenvalues in one parity class: flagged, not certified
  const zk::Certification c3 =
      zk::certify_coercivity(s.Q, s.Qx, {odd, odd, even}, 0.5);
  CHECK(c3.flagged);
  CHECK_FALSE(c3.positive);

  // mixed parity cannot be certified
  zk::EigenPair mixed = normalized_pair(
      -0.1, zk::interior(s.Q) + zk::interior(s.Qx), *s.grid);
  CHECK_THROWS_AS(zk::certify_coercivity(s.Q, s.Qx, {mixed}, 0.5), zk::Error);
}

TEST_CASE("constrained Rayleigh minimum") {
  auto& s = setup();
  const zk::DiscreteOperator L = zk::assemble_L(s.Q);

  const double mu0 = zk::constrained_rayleigh_min(L, *s.grid, {});
  const auto pairs = zk::eig_below(L, *s.grid, 1.0);
  CHECK(std::abs(mu0 - pairs[0].value) <= 1e-8);

  const zk::TensorField q3 = zk::multiply(zk::multiply(s.Q, s.Q), s.Q);
  const zk::TensorField qy = zk::dy(s.Q);
  const double mu1 = zk::constrained_rayleigh_min(L, *s.grid, {q3});
  const double mu3 =
      zk::constrained_rayleigh_min(L, *s.grid, {q3, s.Qx, qy});
  CHECK(mu1 >= mu0 - 1e-10); // constraints only raise the minimum
  CHECK(mu3 >= mu1 - 1e-10);
  CHECK(mu3 > 0.0);

  // duplicated constraint is rank-deficient
  CHECK_THROWS_AS(zk::constrained_rayleigh_min(L, *s.grid, {q3, q3}),
                  zk::Error);
  // non-symmetric operator rejected
  const zk::DiscreteOperator Mbar = zk::assemble_Mbar(s.Q);
  CHECK_THROWS_AS(zk::constrained_rayleigh_min(Mbar, *s.grid, {q3}),
                  zk::Error);
}
