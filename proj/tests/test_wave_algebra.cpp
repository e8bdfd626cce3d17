#include <stdexcept>

#include "doctest.h"
#include "multispin/wave_algebra.hpp"

using namespace multispin;

namespace {

const WaveMatrices& W() { return wave_matrices(); }

}  // namespace

TEST_CASE("alpha links scalar and vector slots") {
  for (int nu = 1; nu <= 4; ++nu) {
    const ExactMatrix& a = W().alpha_of(nu);
    CHECK(a(0, static_cast<std::size_t>(nu)) == GaussianRational(1));
    CHECK(a(static_cast<std::size_t>(nu), 0) == GaussianRational(1));
    CHECK(a.trace().is_zero());
    CHECK(a == a.transpose());
  }
}

TEST_CASE("alpha splits into the spin-1 and spin-0 blocks") {
  for (int nu = 1; nu <= 4; ++nu) {
    ExactMatrix sum = embed(build_beta1(nu), SpaceView::kDim10, SpaceView::kDim11) +
                      embed(build_beta0(nu), SpaceView::kDim5, SpaceView::kDim11);
    CHECK(build_alpha(nu) == sum);
  }
  CHECK(build_beta1(1).rows() == 10);
  CHECK(build_beta0(1).rows() == 5);
}

TEST_CASE("both beta families satisfy the PDK relation for all 64 triples") {
  int beta1_failures = 0, beta0_failures = 0;
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      for (int a = 1; a <= 4; ++a) {
        if (!pdk_residual(W().beta1, mu, nu, a).is_zero()) ++beta1_failures;
        if (!pdk_residual(W().beta0, mu, nu, a).is_zero()) ++beta0_failures;
      }
    }
  }
  CHECK(beta1_failures == 0);
  CHECK(beta0_failures == 0);

  const ExactMatrix& b1 = W().beta1_of(1);
  const ExactMatrix& b2 = W().beta1_of(2);
  CHECK((b1 * b2 * b1).is_zero());
  const ExactMatrix& s1 = W().beta0_of(1);
  CHECK(GaussianRational(2) * (s1 * s1 * s1) == GaussianRational(2) * s1);
}

TEST_CASE("alpha matrices violate the PDK relation") {
  int failures = 0;
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      for (int a = 1; a <= 4; ++a) {
        if (!pdk_residual(W().alpha, mu, nu, a).is_zero()) ++failures;
      }
    }
  }
  CHECK(failures > 0);
  // A single matrix still cubes to itself; mixed triples break.
  CHECK(pdk_residual(W().alpha, 1, 1, 1).is_zero());
}

TEST_CASE("alpha matrices satisfy the symmetrized cubic algebra") {
  int failures = 0;
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      for (int a = 1; a <= 4; ++a) {
        if (!cubic_residual(W().alpha, mu, nu, a).is_zero()) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("beta4 squared is the projector onto 1,2,3,[14],[24],[34]") {
  const ExactMatrix b4 = build_beta1(4);
  const ExactMatrix sq = b4 * b4;
  // dim10 positions: 1 2 3 4 [12] [13] [14] [23] [24] [34]
  const int expected[10] = {1, 1, 1, 0, 0, 0, 1, 0, 1, 1};
  ExactMatrix diag(10, 10);
  for (std::size_t k = 0; k < 10; ++k) diag(k, k) = expected[k];
  CHECK(sq == diag);
}

TEST_CASE("eta hermitianizes the wave equation") {
  const ExactMatrix& eta = W().eta;
  const int expected[11] = {-1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1};
  for (std::size_t k = 0; k < 11; ++k) CHECK(eta(k, k) == GaussianRational(expected[k]));
  for (int i = 1; i <= 3; ++i) CHECK(eta * W().alpha_of(i) == -(W().alpha_of(i) * eta));
  CHECK(eta * W().alpha_of(4) == W().alpha_of(4) * eta);
  CHECK(eta == eta.adjoint());
  CHECK(eta * eta == ExactMatrix::identity(11));
  CHECK(W().eta1 * W().eta1 == ExactMatrix::identity(10));
}

TEST_CASE("Lorentz generators") {
  CHECK_THROWS_AS(build_lorentz(2, 2), std::invalid_argument);
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      if (mu == nu) continue;
      const ExactMatrix j = W().lorentz_of(mu, nu);
      CHECK(j == -W().lorentz_of(nu, mu));
      for (std::size_t k = 0; k < 11; ++k) {
        CHECK(j(0, k).is_zero());
        CHECK(j(k, 0).is_zero());
      }
    }
  }
  CHECK(commutator(W().lorentz_of(1, 2), W().lorentz_of(1, 3)) == -W().lorentz_of(2, 3));
  CHECK(commutator(W().alpha_of(1), W().lorentz_of(1, 2)) == W().alpha_of(2));
  CHECK(commutator(W().lorentz_of(1, 2), W().lorentz_of(1, 2)).is_zero());
}

TEST_CASE("Lorentz closure and alpha covariance for every index combination") {
  int closure_failures = 0, covariance_failures = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
          if (!lorentz_closure_residual(W(), r, s, m, n).is_zero()) ++closure_failures;
        }
        if (!alpha_covariance_residual(W(), r, s, m).is_zero()) ++covariance_failures;
      }
    }
  }
  CHECK(closure_failures == 0);
  CHECK(covariance_failures == 0);
}
