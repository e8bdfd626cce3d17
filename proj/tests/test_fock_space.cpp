#include <vector>

#include "doctest.h"
#include "multispin/fock_space.hpp"
#include "multispin/mode_dynamics.hpp"
#include "test_support.hpp"

using namespace multispin;
using multispin::testing::Gen;

namespace {

constexpr Scheme kSchemes[] = {Scheme::kVacuum1, Scheme::kVacuum2};

FockPolyState random_state(Gen& gen, int max_degree, int truncation, Scheme s) {
  FockPolyState st(truncation, s);
  for (const auto& occ : occupations_up_to(max_degree)) {
    if (gen.integer(0, 2) == 0) st.add(occ, gen.gaussian(5, 3));
  }
  return st;
}

FockOperator lad(int mode, bool dagger) { return FockOperator::ladder({mode, dagger}); }

}  // namespace

TEST_CASE("occupations are enumerated by degree") {
  CHECK(occupations_up_to(0).size() == 1);
  CHECK(occupations_up_to(2).size() == 15);
  CHECK(occupations_up_to(6).size() == 210);
  CHECK(occupations_up_to(1)[1] == Occupation{1, 0, 0, 0});
}

TEST_CASE("ladder commutators") {
  Gen gen(31);
  for (Scheme s : kSchemes) {
    CAPTURE(scheme_name(s));
    for (int trial = 0; trial < 5; ++trial) {
      const FockPolyState v = random_state(gen, 4, 6, s);
      for (int a = 1; a <= 4; ++a) CHECK(commutator(lad(a, false), lad(a, true)).apply(v) == v);
      CHECK(commutator(lad(0, false), lad(0, true)).apply(v) == GaussianRational(-1) * v);
      for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
          if (a == b) continue;
          CHECK(commutator(lad(a, false), lad(b, true)).apply(v).is_zero());
          CHECK(commutator(lad(a, false), lad(b, false)).apply(v).is_zero());
        }
      }
    }
  }
}

TEST_CASE("creation past the truncation throws") {
  for (Scheme s : kSchemes) {
    const auto top = FockPolyState::monomial({1, 1, 0, 1}, 3, s);
    CHECK_THROWS_AS(apply_ladder(LadderOp::b_dag(1), top), TruncationOverflow);
    CHECK_THROWS_AS(FockPolyState::monomial({2, 2, 0, 0}, 3, s), TruncationOverflow);
    CHECK(apply_ladder(LadderOp::b(1), top) == FockPolyState::monomial({0, 1, 0, 1}, 3, s));
  }
  CHECK_THROWS_AS(apply_ladder(LadderOp::b(0), FockPolyState::monomial({1, 1, 1, 0}, 3, Scheme::kVacuum1)),
                  TruncationOverflow);
  CHECK(apply_ladder(LadderOp::b(0), FockPolyState::monomial({1, 1, 1, 0}, 3, Scheme::kVacuum2)).is_zero());
  CHECK_THROWS_AS(FockPolyState(-1, Scheme::kVacuum2), std::invalid_argument);
  CHECK_THROWS_AS(apply_ladder(LadderOp::b(5), FockPolyState::vacuum(1, Scheme::kVacuum2)), std::out_of_range);
}

TEST_CASE("vacuum conditions") {
  const auto v1 = FockPolyState::vacuum(2, Scheme::kVacuum1);
  const auto v2 = FockPolyState::vacuum(2, Scheme::kVacuum2);
  for (int a = 1; a <= 3; ++a) {
    CHECK(apply_ladder(LadderOp::b(a), v1).is_zero());
    CHECK(apply_ladder(LadderOp::b(a), v2).is_zero());
  }
  CHECK(apply_ladder(LadderOp::b_dag(0), v1).is_zero());
  CHECK_FALSE(apply_ladder(LadderOp::b(0), v1).is_zero());
  CHECK(apply_ladder(LadderOp::b(0), v2).is_zero());
  CHECK(apply_ladder(LadderOp::b(4), v2).is_zero());
}

TEST_CASE("Gram matrix of the normalized basis") {
  const auto occ = occupations_up_to(6);
  const ExactMatrix g2 = gram_matrix(6, Scheme::kVacuum2);
  const ExactMatrix g1 = gram_matrix(6, Scheme::kVacuum1);
  for (std::size_t r = 0; r < occ.size(); ++r) {
    for (std::size_t c = 0; c < occ.size(); ++c) {
      const GaussianRational expected2 = r != c ? 0 : (occ[r][3] % 2 == 0 ? 1 : -1);
      CHECK(g2(r, c) == expected2);
      CHECK(g1(r, c) == GaussianRational(r == c ? 1 : 0));
    }
  }
  CHECK(monomial_norm({2, 0, 1, 3}, Scheme::kVacuum2) == -12);
  CHECK(monomial_norm({2, 0, 1, 3}, Scheme::kVacuum1) == 12);
}

TEST_CASE("b and b+ are adjoint for the scheme metric") {
  Gen gen(97);
  for (Scheme s : kSchemes) {
    for (int trial = 0; trial < 6; ++trial) {
      const FockPolyState x = random_state(gen, 3, 5, s);
      const FockPolyState y = random_state(gen, 4, 5, s);
      for (int mode = 0; mode <= 3; ++mode) {
        const GaussianRational lhs = inner_product(apply_ladder(LadderOp::b_dag(mode), x), y);
        CHECK(lhs == inner_product(x, apply_ladder(LadderOp::b(mode), y)));
      }
      // b_4 = i b_0 while b_4^+ = i b_0^+, so b_4^+ is minus the adjoint of b_4.
      const GaussianRational lhs = inner_product(apply_ladder(LadderOp::b_dag(4), x), y);
      CHECK(lhs == -inner_product(x, apply_ladder(LadderOp::b(4), y)));
    }
  }
  CHECK_THROWS_AS(inner_product(FockPolyState::vacuum(1, Scheme::kVacuum1), FockPolyState::vacuum(1, Scheme::kVacuum2)),
                  std::invalid_argument);
}

TEST_CASE("energy spectra in both schemes") {
  const Rational k0(3, 2);
  const EnergyOperator e2 = energy_operator(k0, Scheme::kVacuum2);
  const EnergyOperator e1 = energy_operator(k0, Scheme::kVacuum1);
  CHECK(e2.vacuum_constant.is_zero());
  CHECK(e1.vacuum_constant == GaussianRational(-k0));
  for (const auto& occ : occupations_up_to(6)) {
    const int m = occ[0] + occ[1] + occ[2];
    const int n = occ[3];
    CAPTURE(m);
    CAPTURE(n);
    const auto ev2 = eigenvalue(e2.op, FockPolyState::monomial(occ, 6, Scheme::kVacuum2));
    const auto ev1 = eigenvalue(e1.op, FockPolyState::monomial(occ, 6, Scheme::kVacuum1));
    REQUIRE(ev2);
    REQUIRE(ev1);
    CHECK(*ev2 == GaussianRational(Rational(k0 * (m + n))));
    CHECK(*ev1 == GaussianRational(Rational(k0 * (m - n))));
  }
}

TEST_CASE("normal ordering only drops a c-number") {
  const Rational k0(2);
  for (Scheme s : kSchemes) {
    FockOperator raw;
    for (int a = 1; a <= 3; ++a) raw += FockOperator::word({LadderOp::b_dag(a), LadderOp::b(a)});
    raw -= FockOperator::word({LadderOp::b_dag(0), LadderOp::b(0)});
    raw *= GaussianRational(k0);
    const EnergyOperator e = energy_operator(k0, s);
    // Raw words may create first, so compare below the top degree.
    for (const auto& occ : occupations_up_to(4)) {
      const auto v = FockPolyState::monomial(occ, 5, s);
      CHECK(raw.apply(v) == e.op.apply(v) + e.vacuum_constant * v);
    }
  }
  const FockOperator w = FockOperator::word({LadderOp::b(0), LadderOp::b_dag(2), LadderOp::b_dag(0)});
  CHECK(normal_ordered(w, Scheme::kVacuum1).terms()[0].word ==
        std::vector<LadderOp>{LadderOp::b(0), LadderOp::b_dag(2), LadderOp::b_dag(0)});
  CHECK(normal_ordered(w, Scheme::kVacuum2).terms()[0].word ==
        std::vector<LadderOp>{LadderOp::b_dag(2), LadderOp::b_dag(0), LadderOp::b(0)});
}

TEST_CASE("number charge and Hamiltonian") {
  const auto charges = quantum_charges(Scheme::kVacuum2);
  const FockOperator& j = charges[0];
  for (const auto& occ : occupations_up_to(6)) {
    const auto ev = eigenvalue(j, FockPolyState::monomial(occ, 6, Scheme::kVacuum2));
    REQUIRE(ev);
    CHECK(*ev == GaussianRational(occ[0] + occ[1] + occ[2] + occ[3]));
  }
  // In scheme 1 the charges mixing b_0 with b_a create in pairs, so leave room.
  for (Scheme s : kSchemes) {
    const FockOperator h = quantum_hamiltonian(Rational(5), s);
    for (const auto& q : quantum_charges(s)) CHECK(same_action(commutator(q, h), FockOperator(), 4, s, 4));
  }
  // The quantum Hamiltonian is P_0 in scheme 2.
  CHECK(same_action(quantum_hamiltonian(Rational(5), Scheme::kVacuum2),
                    energy_operator(Rational(5), Scheme::kVacuum2).op, 6, Scheme::kVacuum2));
}

TEST_CASE("quantization reproduces the charge operators") {
  const ModeContext ctx(Rational(3));
  const auto direct = quantum_charges(Scheme::kVacuum2);
  const auto& gens = u31_generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    CAPTURE(gens[k].label());
    const auto m = quadratic_form_matrix(conserved_charge(gens[k], ctx), ctx);
    REQUIRE(m);
    CHECK(*m == charge_matrix(gens[k]));
    CHECK(same_action(quantize(conserved_charge(gens[k], ctx), ctx, Scheme::kVacuum2), direct[k], 3,
                      Scheme::kVacuum2));
  }
  const Observable q1 = Observable::symbol(q_slot(1));
  CHECK_FALSE(quadratic_form_matrix(q1 * q1, ctx));
  CHECK_THROWS_AS(quantize(q1 * q1, ctx, Scheme::kVacuum2), std::invalid_argument);
}

TEST_CASE("commutators of quantized charges follow the classical brackets") {
  // [A^, B^] = i {A, B}^ for every pair of charges, exactly on degree <= 4.
  const ModeContext ctx(Rational(2));
  const Scheme s = Scheme::kVacuum2;
  const auto charges = conserved_charges(ctx);
  const auto ops = quantum_charges(s);
  for (std::size_t a = 0; a < charges.size(); ++a) {
    for (std::size_t b = a + 1; b < charges.size(); ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const FockOperator rhs = GaussianRational::i() * quantize(poisson_bracket(charges[a], charges[b]), ctx, s);
      CHECK(same_action(commutator(ops[a], ops[b]), rhs, 4, s));
    }
  }
}

TEST_CASE("quantum structure table matches the classical one") {
  const ModeContext ctx(Rational(1));
  const Scheme s = Scheme::kVacuum2;
  const StructureTable t = charge_structure_constants(ctx);
  const auto basis = structure_basis();
  std::vector<FockOperator> ops;
  for (const auto& g : basis) ops.push_back(quadratic_form_operator(charge_matrix(g), s));
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = 0; b < ops.size(); ++b) {
      FockOperator rhs;
      for (std::size_t c = 0; c < ops.size(); ++c) rhs += t.c[a][b][c] * ops[c];
      CHECK(same_action(commutator(ops[a], ops[b]), GaussianRational::i() * rhs, 3, s));
    }
  }
}

TEST_CASE("truncation does not change degree-preserving commutators") {
  const auto ops = quantum_charges(Scheme::kVacuum2);
  Gen gen(4242);
  for (int trial = 0; trial < 8; ++trial) {
    const auto& a = ops[gen.integer(0, 16)];
    const auto& b = ops[gen.integer(0, 16)];
    const FockOperator c = commutator(a, b);
    for (const auto& occ : occupations_up_to(4)) {
      const auto lo = c.apply(FockPolyState::monomial(occ, 4, Scheme::kVacuum2));
      const auto hi = c.apply(FockPolyState::monomial(occ, 6, Scheme::kVacuum2));
      CHECK(lo == hi);
    }
  }
}

TEST_CASE("physical and non-physical sectors") {
  Gen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const FockPolyState v = random_state(gen, 4, 4, Scheme::kVacuum2);
    const PhysicalSplit split = decompose_physical(v);
    CHECK(split.physical + split.nonphysical == v);
    CHECK(inner_product(split.physical, split.nonphysical).is_zero());
    const GaussianRational n = inner_product(split.physical, split.physical);
    CHECK(n.is_real());
    CHECK(n.re() >= 0);
    for (const auto& [occ, c] : split.nonphysical.terms()) CHECK(occ[3] > 0);
  }
  // A single b_0 quantum has negative norm.
  const auto one = FockPolyState::monomial({0, 0, 0, 1}, 2, Scheme::kVacuum2);
  CHECK(inner_product(one, one) == GaussianRational(-1));
  CHECK_THROWS_AS(decompose_physical(FockPolyState::vacuum(1, Scheme::kVacuum1)), std::invalid_argument);
}

TEST_CASE("scheme names") {
  CHECK(parse_scheme("1") == Scheme::kVacuum1);
  CHECK(parse_scheme(scheme_name(Scheme::kVacuum2)) == Scheme::kVacuum2);
  CHECK_THROWS_AS(parse_scheme("3"), std::invalid_argument);
}
