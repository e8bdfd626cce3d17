#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multispin/exact_matrix.hpp"
#include "multispin/gaussian_rational.hpp"

namespace multispin {

/// Thrown by spin-direction operators at |p| = 0.
class RestFrameError : public std::domain_error {
 public:
  RestFrameError() : std::domain_error("rest-frame: spin direction undefined") {}
};

/// Thrown when |p| is not rational, so 1/|p| has no exact representation.
class IrrationalMomentumError : public std::domain_error {
 public:
  IrrationalMomentumError() : std::domain_error("|p| irrational: choose a Pythagorean momentum") {}
};

/*
 * On-shell four-momentum with rational spatial part, energy and mass.
 * p_4 = i p0, so p^2 = |p|^2 - p0^2 = -m^2.
 */
class FourMomentum {
 public:
  /// Solves p0 from the mass shell.  Throws std::invalid_argument when m <= 0
  /// or when p0 is irrational.
  static FourMomentum on_shell(const Rational& mass, const std::array<Rational, 3>& p);

  const Rational& mass() const { return m_; }
  const Rational& energy() const { return p0_; }
  const std::array<Rational, 3>& spatial() const { return p_; }

  /// p_mu for mu = 1..4 (p_4 = i p0).
  GaussianRational component(int mu) const;
  Rational spatial_norm_sq() const;
  /// |p| when rational.
  std::optional<Rational> spatial_norm() const;
  bool at_rest() const;
  /// p_mu p_mu = -m^2.
  GaussianRational square() const;
  std::string to_string() const;

 private:
  FourMomentum(Rational m, std::array<Rational, 3> p, Rational p0)
      : m_(std::move(m)), p_(std::move(p)), p0_(std::move(p0)) {}

  Rational m_;
  std::array<Rational, 3> p_;
  Rational p0_;
};

/// alpha_mu p_mu.
ExactMatrix p_slash(const FourMomentum& p);
/// M_eps = i p^ (i p^ - eps m) / (2 m^2).  eps must be +1 or -1.
ExactMatrix energy_projector(const FourMomentum& p, int eps);
/// sigma^2 = (1/m^2)(1/2 p^2 J_{mu nu} J_{mu nu} - J_{mu s} J_{nu s} p_mu p_nu).
ExactMatrix spin_squared(const FourMomentum& p);
/// sigma_p = -(i/|p|) e_{abc} p_a beta_b beta_c, embedded in 11 dims.
/// Throws RestFrameError or IrrationalMomentumError.
ExactMatrix spin_projection_op(const FourMomentum& p);

struct StateLabel {
  int eps = 1;   // +1 | -1
  int spin = 1;  // 0 | 1
  int proj = 0;  // -1 | 0 | +1

  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
  std::string to_string() const;
};

/// Throws std::invalid_argument for labels outside the four pure states per eps.
void validate_label(const StateLabel& label);
/// The four labels at fixed eps, ordered (1,+1), (1,-1), (1,0), (0,0).
std::array<StateLabel, 4> state_labels(int eps);

/*
 * Everything derived from one momentum.  sigma_p and the pure-state
 * projectors are absent in the rest frame.
 */
struct ProjectorFamily {
  FourMomentum momentum;
  ExactMatrix p_hat;
  ExactMatrix m_plus;
  ExactMatrix m_minus;
  ExactMatrix sigma2;
  ExactMatrix spin0;  // S^2_(0) = 1 - sigma^2/2
  ExactMatrix spin1;  // S^2_(1) = sigma^2/2
  std::optional<ExactMatrix> sigma_p;
  std::optional<ExactMatrix> proj_plus;   // 1/2 sigma_p (sigma_p + 1)
  std::optional<ExactMatrix> proj_minus;  // 1/2 sigma_p (sigma_p - 1)
  std::optional<ExactMatrix> proj_zero;   // 1 - sigma_p^2
  std::map<StateLabel, ExactMatrix> deltas;

  /// Builds everything; the sigma_p part is skipped at rest and throws
  /// IrrationalMomentumError when |p| is irrational.
  static ProjectorFamily build(const FourMomentum& p);

  const ExactMatrix& energy(int eps) const;
  const ExactMatrix& delta(const StateLabel& label) const;
  const ExactMatrix& spin_square_projector(int spin) const;
  const ExactMatrix& projection_projector(int proj) const;
};

/// Delta = M_eps S^2 S^ for the given label.
ExactMatrix pure_state_projector(const FourMomentum& p, const StateLabel& label);

/*
 * Rank-1 factorization Delta = Psi Psi-bar with Psi-bar = norm_sign Psi^+ eta
 * and Psi-bar Psi = 1.  Psi = sqrt(scale_sq) psi; scale_sq is 1 whenever the
 * normalization has an exact Gaussian-rational square root.
 */
struct SolutionDyad {
  ExactMatrix psi;      // 11 x 1
  ExactMatrix psi_bar;  // 1 x 11, norm_sign psi^+ eta
  StateLabel labels;
  int norm_sign = 1;
  Rational scale_sq{1};

  ExactMatrix reassemble() const;
  /// Psi-bar Psi including scale_sq.
  GaussianRational bar_times_psi() const;
};

/// Throws std::invalid_argument("not a pure state") unless delta is an
/// idempotent of rank 1 that factors through eta.
SolutionDyad dyad_factorize(const ExactMatrix& delta, const StateLabel& labels);

/// -i p^ Psi = eps m Psi plus the plane-wave component relations
///   m Psi_[mu nu] = i eps (p_mu Psi_nu - p_nu Psi_mu),  -m Psi_0 = i eps p_mu Psi_mu.
bool verify_first_order_solution(const ExactMatrix& psi, const FourMomentum& p, int eps);
bool verify_first_order_solution(const SolutionDyad& d, const FourMomentum& p, int eps);

}  // namespace multispin
