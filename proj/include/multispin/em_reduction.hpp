#pragma once

#include <array>
#include <utility>
#include <vector>

#include "multispin/exact_matrix.hpp"
#include "multispin/fock_space.hpp"

namespace multispin {

// Two transverse modes b_1, b_2.  Polarization states are scheme-2 Fock states
// with no quanta in modes 3 and 4, so the metric is positive.

/// Pauli matrix tau_k, k = 1..3; k = 0 gives the identity.
ExactMatrix pauli(int k);

/// (cos x, sin x) for a half angle x; must lie on the unit circle.
struct HalfAngle {
  Rational cos{1};
  Rational sin{0};

  /// Throws std::invalid_argument unless cos^2 + sin^2 == 1.
  static HalfAngle make(Rational c, Rational s);
  /// Angle addition.
  friend HalfAngle operator+(const HalfAngle& a, const HalfAngle& b);
  friend bool operator==(const HalfAngle&, const HalfAngle&) = default;
};

/// exp(i alpha/2 + i n.tau theta/2) with rational half-angle pairs.
class U2Element {
 public:
  /// Throws std::invalid_argument unless n^2 == 1.
  static U2Element make(HalfAngle alpha, std::array<Rational, 3> n, HalfAngle theta);

  const HalfAngle& alpha() const { return alpha_; }
  const std::array<Rational, 3>& axis() const { return n_; }
  const HalfAngle& theta() const { return theta_; }
  /// e^{i alpha/2} (cos(theta/2) I + i sin(theta/2) n.tau).
  ExactMatrix matrix() const;

 private:
  HalfAngle alpha_;
  std::array<Rational, 3> n_{0, 0, 1};
  HalfAngle theta_;
};

/// n = (0, 1, 0), alpha = 0: the real rotation [[c, s], [-s, c]].
U2Element dual_rotation(const Rational& c, const Rational& s);

/// Normal-ordered b+ M b over modes 1, 2 for a 2x2 M.
FockOperator two_mode_form(const ExactMatrix& m);
/// k0 (b1+ b1 + b2+ b2).
FockOperator em_hamiltonian(const Rational& k0);
/// {J_0, J_1, J_2, J_3}, J_k = b+ (tau_k / 2) b.
std::array<FockOperator, 4> su2_charges();

/// Builds a polarization state from ((n1, n2), amplitude) pairs.
FockPolyState polarization_state(const std::vector<std::pair<std::array<int, 2>, GaussianRational>>& amps,
                                 int truncation);
/// Throws std::invalid_argument unless s is a scheme-2 state on modes 1, 2.
void require_polarization(const FockPolyState& s);

/// <J_0>, <J_1>, <J_2>, <J_3> divided by <s|s>.  Throws std::domain_error on
/// a zero-norm state.
std::array<Rational, 4> stokes_expectations(const FockPolyState& s);

/*
 * Fock-space image of the mode transformation b -> U b: substitutes
 * z_i -> sum_j U_ji z_j, so expectations in the image equal expectations of
 * the transformed charges in the original state.
 */
FockPolyState apply_mode_unitary(const ExactMatrix& u, const FockPolyState& s);

/// R with U+ tau_k U = sum_l R_kl tau_l (k, l = 1..3); S' = R S for the
/// (J_1, J_2, J_3) expectations.
ExactMatrix stokes_rotation(const ExactMatrix& u);

}  // namespace multispin
