#pragma once

#include <array>
#include <span>

#include "multispin/epsilon_algebra.hpp"
#include "multispin/exact_matrix.hpp"

namespace multispin {

/// Spin-1 block: eps^{mu,[mu nu]} + eps^{[mu nu],mu} on dim10.
ExactMatrix build_beta1(int nu);
/// Spin-0 block: eps^{nu,0} + eps^{0,nu} on dim5.
ExactMatrix build_beta0(int nu);
/// Full 11x11 wave matrix, summed directly from the entire-algebra units
/// (not from the beta blocks).
ExactMatrix build_alpha(int nu);

struct EtaMatrices {
  ExactMatrix eta;   // 11x11
  ExactMatrix eta1;  // 10x10 block 2 beta4^2 - I10
};

EtaMatrices build_eta();

/// J_{mu nu} = [beta1_mu, beta1_nu] embedded in 11 dims.  Throws
/// std::invalid_argument for mu == nu.
ExactMatrix build_lorentz(int mu, int nu);

/*
 * All first-order wave-equation matrices, built once.  Index arguments are
 * physics indices 1..4.
 */
struct WaveMatrices {
  std::array<ExactMatrix, 4> alpha;
  std::array<ExactMatrix, 4> beta1;
  std::array<ExactMatrix, 4> beta0;
  ExactMatrix eta;
  ExactMatrix eta1;
  /// Canonical pairs in layout order [12] [13] [14] [23] [24] [34].
  std::array<ExactMatrix, 6> lorentz;

  const ExactMatrix& alpha_of(int mu) const { return alpha.at(static_cast<std::size_t>(mu - 1)); }
  const ExactMatrix& beta1_of(int mu) const { return beta1.at(static_cast<std::size_t>(mu - 1)); }
  const ExactMatrix& beta0_of(int mu) const { return beta0.at(static_cast<std::size_t>(mu - 1)); }
  /// J_{mu nu} for any order; zero for mu == nu and sign-flipped when mu > nu.
  ExactMatrix lorentz_of(int mu, int nu) const;
  /// beta1_mu embedded into 11 dims.
  ExactMatrix beta1_embedded(int mu) const;
};

/// Shared immutable instance.
const WaveMatrices& wave_matrices();

inline int kronecker(int a, int b) { return a == b ? 1 : 0; }

// Residuals below are LHS - RHS of the named relation; zero means it holds.

/// b_mu b_nu b_a + b_a b_nu b_mu - delta_{mu nu} b_a - delta_{a nu} b_mu
ExactMatrix pdk_residual(std::span<const ExactMatrix, 4> beta, int mu, int nu, int a);
/// Symmetrized six-term product minus 2(delta_{mu nu} a_a + delta_{a nu} a_mu + delta_{mu a} a_nu).
ExactMatrix cubic_residual(std::span<const ExactMatrix, 4> alpha, int mu, int nu, int a);
/// [J_rs, J_mn] - (d_sm J_rn + d_rn J_sm - d_rm J_sn - d_sn J_rm)
ExactMatrix lorentz_closure_residual(const WaveMatrices& w, int rho, int sigma, int mu, int nu);
/// [alpha_l, J_mn] - (d_lm alpha_n - d_ln alpha_m)
ExactMatrix alpha_covariance_residual(const WaveMatrices& w, int lambda, int mu, int nu);

}  // namespace multispin
