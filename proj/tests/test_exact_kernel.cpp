#include <array>
#include <stdexcept>

#include "doctest.h"
#include "multispin/exact_matrix.hpp"
#include "multispin/jet.hpp"
#include "multispin/matrix_json.hpp"
#include "test_support.hpp"

using namespace multispin;
using multispin::testing::Gen;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

ExactMatrix unit(std::size_t n, std::size_t r, std::size_t c) {
  ExactMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

}  // namespace

TEST_CASE("rational text round trip is canonical") {
  CHECK(rational_to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(rational_to_string(parse_rational("0")) == "0/1");
  CHECK(rational_to_string(parse_rational(" 12 ")) == "12/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("exact square roots and two-square splits") {
  CHECK(rational_sqrt(Rational(25, 64)) == Rational(5, 8));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());

  auto split = sum_of_two_squares(Rational(32, 25));
  REQUIRE(split.has_value());
  CHECK(split->first * split->first + split->second * split->second == Rational(32, 25));
  CHECK_FALSE(sum_of_two_squares(Rational(3)).has_value());
  CHECK_FALSE(sum_of_two_squares(Rational(21, 4)).has_value());
}

TEST_CASE("GaussianRational field axioms hold on random inputs") {
  Gen gen(0x5eed01);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gen.gaussian(), b = gen.gaussian(), c = gen.gaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational{});
    if (!a.is_zero()) CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).re() == a.norm());
  }
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational{}, std::domain_error);
}

TEST_CASE("imaginary unit") {
  const auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.to_string() == "i");
  CHECK(GaussianRational(Rational(1, 2), Rational(-3)).to_string() == "1/2-3i");
}

TEST_CASE("commutator of matrix units") {
  // [e12, e21] = e11 - e22
  CHECK(commutator(unit(4, 0, 1), unit(4, 1, 0)) == unit(4, 0, 0) - unit(4, 1, 1));
  Gen gen(7);
  ExactMatrix a = gen.matrix(5, 5);
  CHECK(commutator(ExactMatrix::identity(5), a).is_zero());
  CHECK_THROWS_AS(commutator(ExactMatrix::zero(3), ExactMatrix::zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), std::invalid_argument);
}

TEST_CASE("rank of trivial matrices") {
  CHECK(rank(ExactMatrix::identity(11)) == 11);
  CHECK(rank(ExactMatrix::zero(11)) == 0);
  CHECK(rank(ExactMatrix(3, 7)) == 0);
}

TEST_CASE("Bareiss rank agrees with the field-elimination oracle") {
  Gen gen(0xba2e155);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 7));
    const auto m = static_cast<std::size_t>(gen.integer(1, 7));
    const auto k = static_cast<std::size_t>(gen.integer(1, 7));
    // Products of thin factors give rank-deficient inputs most of the time.
    ExactMatrix a = gen.matrix(n, k) * gen.matrix(k, m);
    CHECK(rank(a) == testing::rank_oracle(a));
    CHECK(rank(a) <= std::min({n, m, k}));
  }
}

TEST_CASE("rank(AB) <= min(rank A, rank B)") {
  Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 6));
    ExactMatrix a = gen.matrix(n, 2) * gen.matrix(2, n);
    ExactMatrix b = gen.matrix(n, n);
    if (trial % 3 == 0) b = gen.matrix(n, 1) * gen.matrix(1, n);
    CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("linear solve reproduces consistent right-hand sides") {
  Gen gen(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const auto m = static_cast<std::size_t>(gen.integer(1, 6));
    const ExactMatrix a = trial % 2 == 0 ? gen.matrix(n, m) : gen.matrix(n, 2) * gen.matrix(2, m);
    const ExactMatrix b = a * gen.matrix(m, 2);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
  // x + y = 1 and x + y = 2 have no solution.
  ExactMatrix a(2, 2), b(2, 1);
  a(0, 0) = a(0, 1) = a(1, 0) = a(1, 1) = 1;
  b(0, 0) = 1;
  b(1, 0) = 2;
  CHECK_FALSE(solve(a, b).has_value());
  CHECK_THROWS_AS(solve(a, ExactMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("minimal polynomial check") {
  const std::array<GaussianRational, 1> one{1};
  CHECK(minimal_poly_check(ExactMatrix::identity(4), one));

  ExactMatrix d(3, 3);
  d(0, 0) = 2;
  d(2, 2) = 2;
  const std::array<GaussianRational, 2> zero_two{0, 2};
  const std::array<GaussianRational, 1> only_two{2};
  CHECK(minimal_poly_check(d, zero_two));
  CHECK_FALSE(minimal_poly_check(d, only_two));

  // Nilpotent Jordan block needs the root twice.
  ExactMatrix n = unit(2, 0, 1);
  const std::array<GaussianRational, 1> z1{0};
  const std::array<GaussianRational, 2> z2{0, 0};
  CHECK_FALSE(minimal_poly_check(n, z1));
  CHECK(minimal_poly_check(n, z2));
}

TEST_CASE("jet product rule") {
  JetScalar x = JetScalar::variable("x", q(3));
  JetScalar y = JetScalar::variable("y", q(-2), GaussianRational::i());
  JetScalar p = x * y;
  CHECK(p.value() == q(-6));
  CHECK(p.derivative("x") == q(-2));
  CHECK(p.derivative("y") == GaussianRational(0, 3));
  CHECK((x * x * x).derivative("x") == q(27));
  // Second-order terms vanish: dx * dx == 0.
  JetScalar dx = JetScalar::variable("x");
  CHECK((dx * dx).is_zero());
  CHECK(JetScalar(q(5)).is_constant());
}

TEST_CASE("jet gradients match symbolic differentiation of random quadratics") {
  // P(x, y) = c0 + c1 x + c2 y + c3 x^2 + c4 x y + c5 y^2
  // dP/dx = c1 + 2 c3 x + c4 y, dP/dy = c2 + c4 x + 2 c5 y
  Gen gen(4242);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<GaussianRational, 6> c;
    for (auto& ci : c) ci = gen.gaussian();
    const GaussianRational x0 = gen.gaussian(), y0 = gen.gaussian();
    JetScalar x = JetScalar::variable("x", x0);
    JetScalar y = JetScalar::variable("y", y0);
    JetScalar p = JetScalar(c[0]) + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + c[5] * y * y;
    CHECK(p.value() == c[0] + c[1] * x0 + c[2] * y0 + c[3] * x0 * x0 + c[4] * x0 * y0 + c[5] * y0 * y0);
    CHECK(p.derivative("x") == c[1] + GaussianRational(2) * c[3] * x0 + c[4] * y0);
    CHECK(p.derivative("y") == c[2] + c[4] * x0 + GaussianRational(2) * c[5] * y0);
  }
}

TEST_CASE("matrix JSON format") {
  ExactMatrix m(1, 2);
  m(0, 0) = GaussianRational(Rational(-3, 4), Rational(1));
  Json j = matrix_to_json(m);
  CHECK(j.dump() == R"({"rows":1,"cols":2,"entries":[["-3/4","1/1"],["0/1","0/1"]]})");

  Gen gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix r = gen.matrix(3, 4);
    CHECK(matrix_from_json(Json::parse(matrix_to_json(r).dump())) == r);
  }
  CHECK_THROWS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[[0.5,"0"]]})")));
}
