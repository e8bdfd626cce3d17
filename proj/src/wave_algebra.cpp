#include "multispin/wave_algebra.hpp"

#include <stdexcept>

namespace multispin {

namespace {

void require_index(int mu) {
  if (mu < 1 || mu > 4) throw std::out_of_range("wave-matrix index must be 1..4");
}

// sum_mu eps^{mu,[mu nu]} + eps^{[mu nu],mu}
ExactMatrix vector_bivector_links(int nu, SpaceView view) {
  const std::size_t n = dimension(view);
  ExactMatrix m(n, n);
  for (int mu = 1; mu <= 4; ++mu) {
    SignedIndex v{BasisIndex::vector(mu), 1};
    SignedIndex b = bivector_pair(mu, nu);
    m += epsilon(v, b, view);
    m += epsilon(b, v, view);
  }
  return m;
}

// eps^{nu,0} + eps^{0,nu}
ExactMatrix scalar_vector_links(int nu, SpaceView view) {
  return epsilon(BasisIndex::vector(nu), BasisIndex::scalar(), view) +
         epsilon(BasisIndex::scalar(), BasisIndex::vector(nu), view);
}

}  // namespace

ExactMatrix build_beta1(int nu) {
  require_index(nu);
  return vector_bivector_links(nu, SpaceView::kDim10);
}

ExactMatrix build_beta0(int nu) {
  require_index(nu);
  return scalar_vector_links(nu, SpaceView::kDim5);
}

ExactMatrix build_alpha(int nu) {
  require_index(nu);
  return vector_bivector_links(nu, SpaceView::kDim11) + scalar_vector_links(nu, SpaceView::kDim11);
}

EtaMatrices build_eta() {
  const ExactMatrix b4 = build_beta1(4);
  ExactMatrix eta1 = GaussianRational(2) * (b4 * b4) - identity_of(SpaceView::kDim10);
  ExactMatrix eta = embed(eta1, SpaceView::kDim10, SpaceView::kDim11) -
                    epsilon(BasisIndex::scalar(), BasisIndex::scalar(), SpaceView::kDim11);
  return {std::move(eta), std::move(eta1)};
}

ExactMatrix build_lorentz(int mu, int nu) {
  require_index(mu);
  require_index(nu);
  if (mu == nu) throw std::invalid_argument("Lorentz generator needs mu != nu");
  const ExactMatrix bm = build_beta1(mu);
  const ExactMatrix bn = build_beta1(nu);
  return embed(bm * bn - bn * bm, SpaceView::kDim10, SpaceView::kDim11);
}

ExactMatrix WaveMatrices::lorentz_of(int mu, int nu) const {
  SignedIndex p = bivector_pair(mu, nu);
  if (p.sign == 0) return ExactMatrix::zero(11);
  const ExactMatrix& j = lorentz.at(p.index.position() - 5);
  return p.sign > 0 ? j : -j;
}

ExactMatrix WaveMatrices::beta1_embedded(int mu) const {
  return embed(beta1_of(mu), SpaceView::kDim10, SpaceView::kDim11);
}

const WaveMatrices& wave_matrices() {
  static const WaveMatrices w = [] {
    WaveMatrices out;
    for (int mu = 1; mu <= 4; ++mu) {
      const auto k = static_cast<std::size_t>(mu - 1);
      out.alpha[k] = build_alpha(mu);
      out.beta1[k] = build_beta1(mu);
      out.beta0[k] = build_beta0(mu);
    }
    EtaMatrices e = build_eta();
    out.eta = std::move(e.eta);
    out.eta1 = std::move(e.eta1);
    for (std::size_t k = 0; k < 6; ++k) {
      const BasisIndex b = BasisIndex::from_position(5 + k);
      out.lorentz[k] = build_lorentz(b.mu(), b.nu());
    }
    return out;
  }();
  return w;
}

ExactMatrix pdk_residual(std::span<const ExactMatrix, 4> beta, int mu, int nu, int a) {
  const ExactMatrix& bm = beta[static_cast<std::size_t>(mu - 1)];
  const ExactMatrix& bn = beta[static_cast<std::size_t>(nu - 1)];
  const ExactMatrix& ba = beta[static_cast<std::size_t>(a - 1)];
  ExactMatrix lhs = bm * bn * ba + ba * bn * bm;
  ExactMatrix rhs = GaussianRational(kronecker(mu, nu)) * ba + GaussianRational(kronecker(a, nu)) * bm;
  return lhs - rhs;
}

ExactMatrix cubic_residual(std::span<const ExactMatrix, 4> alpha, int mu, int nu, int a) {
  const ExactMatrix& am = alpha[static_cast<std::size_t>(mu - 1)];
  const ExactMatrix& an = alpha[static_cast<std::size_t>(nu - 1)];
  const ExactMatrix& aa = alpha[static_cast<std::size_t>(a - 1)];
  ExactMatrix lhs = am * an * aa + aa * an * am + am * aa * an + an * aa * am + an * am * aa + aa * am * an;
  ExactMatrix rhs = GaussianRational(2) * (GaussianRational(kronecker(mu, nu)) * aa +
                                           GaussianRational(kronecker(a, nu)) * am +
                                           GaussianRational(kronecker(mu, a)) * an);
  return lhs - rhs;
}

ExactMatrix lorentz_closure_residual(const WaveMatrices& w, int rho, int sigma, int mu, int nu) {
  ExactMatrix lhs = commutator(w.lorentz_of(rho, sigma), w.lorentz_of(mu, nu));
  ExactMatrix rhs = GaussianRational(kronecker(sigma, mu)) * w.lorentz_of(rho, nu) +
                    GaussianRational(kronecker(rho, nu)) * w.lorentz_of(sigma, mu) -
                    GaussianRational(kronecker(rho, mu)) * w.lorentz_of(sigma, nu) -
                    GaussianRational(kronecker(sigma, nu)) * w.lorentz_of(rho, mu);
  return lhs - rhs;
}

ExactMatrix alpha_covariance_residual(const WaveMatrices& w, int lambda, int mu, int nu) {
  ExactMatrix lhs = commutator(w.alpha_of(lambda), w.lorentz_of(mu, nu));
  ExactMatrix rhs = GaussianRational(kronecker(lambda, mu)) * w.alpha_of(nu) -
                    GaussianRational(kronecker(lambda, nu)) * w.alpha_of(mu);
  return lhs - rhs;
}

}  // namespace multispin
