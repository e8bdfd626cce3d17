#include "multispin/em_reduction.hpp"

#include <map>
#include <stdexcept>

namespace multispin {

namespace {

using Poly2 = std::map<std::array<int, 2>, GaussianRational>;

Poly2 multiply(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      GaussianRational& slot = out[{ea[0] + eb[0], ea[1] + eb[1]}];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void check_two_by_two(const ExactMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("expected a 2x2 matrix");
}

}  // namespace

ExactMatrix pauli(int k) {
  ExactMatrix t(2, 2);
  switch (k) {
    case 0:
      t(0, 0) = 1;
      t(1, 1) = 1;
      break;
    case 1:
      t(0, 1) = 1;
      t(1, 0) = 1;
      break;
    case 2:
      t(0, 1) = -GaussianRational::i();
      t(1, 0) = GaussianRational::i();
      break;
    case 3:
      t(0, 0) = 1;
      t(1, 1) = -1;
      break;
    default:
      throw std::out_of_range("Pauli index must be 0..3");
  }
  return t;
}

HalfAngle HalfAngle::make(Rational c, Rational s) {
  c.canonicalize();
  s.canonicalize();
  if (c * c + s * s != 1) {
    throw std::invalid_argument("half angle needs cos^2 + sin^2 = 1, got (" + rational_to_string(c) + ", " +
                                rational_to_string(s) + ")");
  }
  return {c, s};
}

HalfAngle operator+(const HalfAngle& a, const HalfAngle& b) {
  return {Rational(a.cos * b.cos - a.sin * b.sin), Rational(a.sin * b.cos + a.cos * b.sin)};
}

U2Element U2Element::make(HalfAngle alpha, std::array<Rational, 3> n, HalfAngle theta) {
  Rational n2 = 0;
  for (auto& x : n) {
    x.canonicalize();
    n2 += x * x;
  }
  if (n2 != 1) throw std::invalid_argument("U(2) axis must be a unit vector");
  // Re-validate in case the pairs were built by hand.
  HalfAngle::make(alpha.cos, alpha.sin);
  HalfAngle::make(theta.cos, theta.sin);
  U2Element u;
  u.alpha_ = alpha;
  u.n_ = n;
  u.theta_ = theta;
  return u;
}

ExactMatrix U2Element::matrix() const {
  ExactMatrix n_tau(2, 2);
  for (int k = 1; k <= 3; ++k) n_tau += GaussianRational(n_[k - 1]) * pauli(k);
  const ExactMatrix su2 =
      GaussianRational(theta_.cos) * pauli(0) + GaussianRational(Rational(0), theta_.sin) * n_tau;
  return GaussianRational(alpha_.cos, alpha_.sin) * su2;
}

U2Element dual_rotation(const Rational& c, const Rational& s) {
  return U2Element::make(HalfAngle{}, {Rational(0), Rational(1), Rational(0)}, HalfAngle::make(c, s));
}

FockOperator two_mode_form(const ExactMatrix& m) {
  check_two_by_two(m);
  ExactMatrix full(4, 4);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) full(r, c) = m(r, c);
  }
  return quadratic_form_operator(full, Scheme::kVacuum2);
}

FockOperator em_hamiltonian(const Rational& k0) { return two_mode_form(GaussianRational(k0) * pauli(0)); }

std::array<FockOperator, 4> su2_charges() {
  std::array<FockOperator, 4> out;
  for (int k = 0; k <= 3; ++k) out[k] = two_mode_form(GaussianRational(Rational(1, 2)) * pauli(k));
  return out;
}

FockPolyState polarization_state(const std::vector<std::pair<std::array<int, 2>, GaussianRational>>& amps,
                                 int truncation) {
  FockPolyState s(truncation, Scheme::kVacuum2);
  for (const auto& [occ, c] : amps) s.add({occ[0], occ[1], 0, 0}, c);
  return s;
}

void require_polarization(const FockPolyState& s) {
  if (s.scheme() != Scheme::kVacuum2) throw std::invalid_argument("polarization states live in scheme 2");
  for (const auto& [occ, c] : s.terms()) {
    if (occ[2] != 0 || occ[3] != 0) throw std::invalid_argument("polarization state occupies modes 3 or 4");
  }
}

std::array<Rational, 4> stokes_expectations(const FockPolyState& s) {
  require_polarization(s);
  const GaussianRational norm = inner_product(s, s);
  if (norm.is_zero()) throw std::domain_error("Stokes parameters need a nonzero state");
  const auto charges = su2_charges();
  std::array<Rational, 4> out;
  for (int k = 0; k <= 3; ++k) {
    const GaussianRational v = inner_product(s, charges[k].apply(s)) / norm;
    if (!v.is_real()) throw std::logic_error("Hermitian charge with a complex expectation");
    out[k] = v.re();
  }
  return out;
}

FockPolyState apply_mode_unitary(const ExactMatrix& u, const FockPolyState& s) {
  check_two_by_two(u);
  require_polarization(s);
  // Images of z_1 and z_2.
  std::array<Poly2, 2> image;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!u(j, i).is_zero()) image[i][{static_cast<int>(j == 0), static_cast<int>(j == 1)}] = u(j, i);
    }
  }
  FockPolyState out(s.truncation(), s.scheme());
  for (const auto& [occ, c] : s.terms()) {
    Poly2 p{{{0, 0}, c}};
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < occ[i]; ++k) p = multiply(p, image[i]);
    }
    for (const auto& [e, v] : p) out.add({e[0], e[1], 0, 0}, v);
  }
  return out;
}

ExactMatrix stokes_rotation(const ExactMatrix& u) {
  check_two_by_two(u);
  const ExactMatrix ud = u.adjoint();
  ExactMatrix r(3, 3);
  for (int k = 1; k <= 3; ++k) {
    const ExactMatrix rotated = ud * pauli(k) * u;
    for (int l = 1; l <= 3; ++l) {
      r(k - 1, l - 1) = GaussianRational(Rational(1, 2)) * (rotated * pauli(l)).trace();
    }
  }
  return r;
}

}  // namespace multispin
