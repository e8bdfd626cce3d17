#include <array>
#include <vector>

#include "doctest.h"
#include "multispin/epsilon_algebra.hpp"
#include "multispin/spin_projectors.hpp"
#include "multispin/wave_algebra.hpp"
#include "test_support.hpp"

using namespace multispin;
using multispin::testing::Gen;
using multispin::testing::rank_oracle;

namespace {

FourMomentum mom(long m, long px, long py, long pz) {
  return FourMomentum::on_shell(Rational(m), {Rational(px), Rational(py), Rational(pz)});
}

std::vector<FourMomentum> suite_momenta() {
  return {mom(4, 0, 0, 3), mom(12, 3, 4, 0), mom(4, 1, 2, 2),
          FourMomentum::on_shell(Rational(4, 5), {Rational(0), Rational(3, 5), Rational(0)})};
}

ExactMatrix id11() { return ExactMatrix::identity(11); }

}  // namespace

TEST_CASE("four-momentum sits on the mass shell") {
  FourMomentum p = mom(4, 0, 0, 3);
  CHECK(p.energy() == 5);
  CHECK(p.component(4) == GaussianRational(Rational(0), Rational(5)));
  CHECK(p.square() == GaussianRational(-16));
  CHECK(p.spatial_norm() == Rational(3));
  CHECK_FALSE(p.at_rest());
  CHECK(mom(4, 0, 0, 0).at_rest());
  CHECK_THROWS_AS(mom(1, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(mom(0, 3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.component(5), std::out_of_range);
}

TEST_CASE("p-slash") {
  for (const auto& p : suite_momenta()) {
    const ExactMatrix ph = p_slash(p);
    CHECK(ph * ph * ph == p.square() * ph);
    CHECK(ph.trace().is_zero());
  }
  FourMomentum rest = mom(4, 0, 0, 0);
  CHECK(p_slash(rest) == GaussianRational(Rational(0), Rational(4)) * wave_matrices().alpha_of(4));
}

TEST_CASE("energy projectors") {
  for (const auto& p : suite_momenta()) {
    const ExactMatrix mp = energy_projector(p, 1), mm = energy_projector(p, -1);
    CHECK(mp * mp == mp);
    CHECK(mm * mm == mm);
    CHECK((mp * mm).is_zero());
    CHECK((mm * mp).is_zero());
    CHECK(rank_oracle(mp) == 4);
    CHECK(rank_oracle(mm) == 4);
    CHECK(rank(mp) == 4);
    const ExactMatrix ph = p_slash(p);
    const GaussianRational m2 = Rational(p.mass() * p.mass());
    CHECK(mp + mm == -(GaussianRational(1) / m2) * (ph * ph));
    CHECK((mp + mm) * (mp + mm) == mp + mm);
  }
  CHECK_THROWS_AS(energy_projector(mom(4, 0, 0, 3), 0), std::invalid_argument);
}

TEST_CASE("squared spin obeys its minimal equation with both eigenvalues present") {
  const std::array<GaussianRational, 2> roots{0, 2};
  for (const auto& p : suite_momenta()) {
    const ExactMatrix s2 = spin_squared(p);
    CHECK(minimal_poly_check(s2, roots));
    // Diagonalizable, so the ranks give the multiplicities: 2 appears 9 times, 0 twice.
    CHECK(rank_oracle(s2) == 9);
    CHECK(rank_oracle(s2 - GaussianRational(2) * id11()) == 2);
  }
  // Rest frame still has a spin operator.
  CHECK(minimal_poly_check(spin_squared(mom(4, 0, 0, 0)), roots));
}

TEST_CASE("spin projection operator") {
  const std::array<GaussianRational, 3> roots{0, 1, -1};
  for (const auto& p : suite_momenta()) {
    const ExactMatrix sp = spin_projection_op(p);
    CHECK(minimal_poly_check(sp, roots));
    CHECK(commutator(sp, p_slash(p)).is_zero());
    CHECK(GaussianRational(Rational(1, 2)) * spin_squared(p) * sp == sp);
  }
  // Along the 3-axis only the [12] generator survives: sigma_p = -i J_12.
  const ExactMatrix expected = -(GaussianRational::i() * wave_matrices().lorentz_of(1, 2));
  CHECK(spin_projection_op(mom(4, 0, 0, 3)) == expected);
  CHECK_THROWS_AS(spin_projection_op(mom(4, 0, 0, 0)), RestFrameError);
  // |p| = sqrt(2) with p0 = 3/2, m = 1/2.
  FourMomentum irr = FourMomentum::on_shell(Rational(1, 2), {Rational(1), Rational(1), Rational(0)});
  CHECK_THROWS_AS(spin_projection_op(irr), IrrationalMomentumError);
}

TEST_CASE("all projector commutators vanish") {
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    const std::array<const ExactMatrix*, 5> ops{&f.spin0, &f.spin1, &*f.proj_plus, &*f.proj_minus, &*f.proj_zero};
    for (const ExactMatrix* op : ops) CHECK(commutator(*op, f.p_hat).is_zero());
    for (const ExactMatrix* s : {&f.spin0, &f.spin1}) {
      for (const ExactMatrix* t : {&*f.proj_plus, &*f.proj_minus, &*f.proj_zero}) CHECK(commutator(*s, *t).is_zero());
    }
  }
}

TEST_CASE("sigma_p spectrum on the energy range is {+1, -1, 0, 0}") {
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    for (int eps : {1, -1}) {
      CHECK(rank_oracle(f.energy(eps) * *f.proj_plus) == 1);
      CHECK(rank_oracle(f.energy(eps) * *f.proj_minus) == 1);
      CHECK(rank_oracle(f.energy(eps) * *f.proj_zero) == 2);
    }
  }
}

TEST_CASE("pure-state projectors form an orthogonal rank-1 resolution of M_eps") {
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    std::vector<StateLabel> all;
    for (int eps : {1, -1}) {
      ExactMatrix sum(11, 11);
      for (const auto& label : state_labels(eps)) {
        const ExactMatrix& d = f.delta(label);
        CHECK(d * d == d);
        CHECK(rank_oracle(d) == 1);
        sum += d;
        all.push_back(label);
      }
      CHECK(sum == f.energy(eps));
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (a == b) continue;
        CHECK((f.delta(a) * f.delta(b)).is_zero());
      }
    }
  }
  FourMomentum p = mom(4, 0, 0, 3);
  CHECK(pure_state_projector(p, {1, 1, -1}) == ProjectorFamily::build(p).delta({1, 1, -1}));
  CHECK_THROWS_AS(pure_state_projector(p, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pure_state_projector(p, {1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ProjectorFamily::build(mom(4, 0, 0, 0)).delta({1, 1, 1}), RestFrameError);
}

TEST_CASE("dyads reassemble their projectors") {
  const ExactMatrix& eta = wave_matrices().eta;
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    for (const auto& [label, delta] : f.deltas) {
      const SolutionDyad d = dyad_factorize(delta, label);
      CHECK(d.reassemble() == delta);
      CHECK(d.scale_sq == 1);
      CHECK(d.psi_bar == GaussianRational(d.norm_sign) * (d.psi.adjoint() * eta));
      CHECK(d.bar_times_psi() == GaussianRational(1));
      CHECK((d.psi.adjoint() * eta * d.psi)(0, 0) == GaussianRational(d.norm_sign));
      CHECK(delta * d.psi == d.bar_times_psi() * d.psi);
      CHECK(verify_first_order_solution(d, p, label.eps));
    }
  }
  CHECK_THROWS_AS(dyad_factorize(energy_projector(mom(4, 0, 0, 3), 1), {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dyad_factorize(ExactMatrix::zero(11), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("dyad norm signs are frozen") {
  // Regression values: (1,+1), (1,-1), (1,0), (0,0) at either energy sign.
  const std::array<int, 4> expected{1, 1, 1, -1};
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    for (int eps : {1, -1}) {
      const auto labels = state_labels(eps);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(dyad_factorize(f.delta(labels[k]), labels[k]).norm_sign == expected[k]);
      }
    }
  }
}

TEST_CASE("spin-0 solutions carry no bivector components") {
  for (const auto& p : suite_momenta()) {
    const ProjectorFamily f = ProjectorFamily::build(p);
    for (int eps : {1, -1}) {
      const SolutionDyad d = dyad_factorize(f.delta({eps, 0, 0}), {eps, 0, 0});
      for (std::size_t k = 5; k < 11; ++k) CHECK(d.psi(k, 0).is_zero());
    }
  }
}

TEST_CASE("vectors outside the energy range fail the first-order check") {
  Gen gen(56);
  FourMomentum p = mom(4, 0, 0, 3);
  const ExactMatrix mp = energy_projector(p, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix v = gen.matrix(11, 1);
    if (mp * v == v) continue;
    CHECK_FALSE(verify_first_order_solution(v, p, 1));
  }
  // Projecting a random vector into the range always gives a solution.
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix v = mp * gen.matrix(11, 1);
    CHECK(verify_first_order_solution(v, p, 1));
    if (!v.is_zero()) CHECK_FALSE(verify_first_order_solution(v, p, -1));
  }
  CHECK_THROWS_AS(verify_first_order_solution(ExactMatrix(10, 1), p, 1), std::invalid_argument);
}

TEST_CASE("random Pythagorean momenta satisfy the projector identities") {
  Gen gen(0x9e37);
  const std::array<GaussianRational, 2> s2_roots{0, 2};
  const std::array<GaussianRational, 3> sp_roots{0, 1, -1};
  for (int trial = 0; trial < 6; ++trial) {
    auto [m, spatial] = gen.pythagorean_momentum();
    const FourMomentum p = FourMomentum::on_shell(m, spatial);
    const ProjectorFamily f = ProjectorFamily::build(p);
    CAPTURE(p.to_string());
    CHECK(f.p_hat * f.p_hat * f.p_hat == p.square() * f.p_hat);
    CHECK(f.m_plus * f.m_plus == f.m_plus);
    CHECK(minimal_poly_check(f.sigma2, s2_roots));
    CHECK(minimal_poly_check(*f.sigma_p, sp_roots));
    for (int eps : {1, -1}) {
      ExactMatrix sum(11, 11);
      for (const auto& label : state_labels(eps)) {
        const SolutionDyad d = dyad_factorize(f.delta(label), label);
        CHECK(d.reassemble() == f.delta(label));
        CHECK(verify_first_order_solution(d, p, eps));
        sum += f.delta(label);
      }
      CHECK(sum == f.energy(eps));
    }
  }
}
