#include "multispin/spin_projectors.hpp"

#include <sstream>

#include "multispin/epsilon_algebra.hpp"
#include "multispin/wave_algebra.hpp"

namespace multispin {

namespace {

constexpr std::size_t kDim = 11;

void require_sign(int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("energy sign must be +1 or -1");
}

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // Even permutations of (1,2,3).
  if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
  return -1;
}

ExactMatrix identity11() { return ExactMatrix::identity(kDim); }

GaussianRational half() { return Rational(1, 2); }

}  // namespace

FourMomentum FourMomentum::on_shell(const Rational& mass, const std::array<Rational, 3>& p) {
  if (sgn(mass) <= 0) throw std::invalid_argument("mass must be positive");
  Rational p0_sq = mass * mass;
  for (const auto& c : p) p0_sq += c * c;
  auto p0 = rational_sqrt(p0_sq);
  if (!p0) throw std::invalid_argument("p0 irrational: p0^2 = " + rational_to_string(p0_sq));
  return FourMomentum(mass, p, *p0);
}

GaussianRational FourMomentum::component(int mu) const {
  if (mu >= 1 && mu <= 3) return p_[static_cast<std::size_t>(mu - 1)];
  if (mu == 4) return {Rational(0), p0_};
  throw std::out_of_range("momentum index must be 1..4");
}

Rational FourMomentum::spatial_norm_sq() const {
  Rational s = 0;
  for (const auto& c : p_) s += c * c;
  return s;
}

std::optional<Rational> FourMomentum::spatial_norm() const { return rational_sqrt(spatial_norm_sq()); }

bool FourMomentum::at_rest() const { return sgn(spatial_norm_sq()) == 0; }

GaussianRational FourMomentum::square() const {
  GaussianRational s;
  for (int mu = 1; mu <= 4; ++mu) s += component(mu) * component(mu);
  return s;
}

std::string FourMomentum::to_string() const {
  std::ostringstream os;
  os << "m=" << m_.get_str() << " p=(" << p_[0].get_str() << "," << p_[1].get_str() << "," << p_[2].get_str()
     << ") p0=" << p0_.get_str();
  return os.str();
}

ExactMatrix p_slash(const FourMomentum& p) {
  const WaveMatrices& w = wave_matrices();
  ExactMatrix out(kDim, kDim);
  for (int mu = 1; mu <= 4; ++mu) out += p.component(mu) * w.alpha_of(mu);
  return out;
}

ExactMatrix energy_projector(const FourMomentum& p, int eps) {
  require_sign(eps);
  if (sgn(p.mass()) == 0) throw std::domain_error("energy projector is singular at m = 0");
  const ExactMatrix ip = GaussianRational::i() * p_slash(p);
  const GaussianRational m = p.mass();
  const GaussianRational scale = GaussianRational(1) / (GaussianRational(2) * m * m);
  return scale * (ip * (ip - GaussianRational(eps) * m * identity11()));
}

ExactMatrix spin_squared(const FourMomentum& p) {
  const WaveMatrices& w = wave_matrices();
  ExactMatrix pair_sum(kDim, kDim);
  ExactMatrix contracted(kDim, kDim);
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      const ExactMatrix jmn = w.lorentz_of(mu, nu);
      pair_sum += jmn * jmn;
      const GaussianRational pp = p.component(mu) * p.component(nu);
      if (pp.is_zero()) continue;
      for (int s = 1; s <= 4; ++s) contracted += pp * (w.lorentz_of(mu, s) * w.lorentz_of(nu, s));
    }
  }
  const GaussianRational m = p.mass();
  const GaussianRational inv_m2 = GaussianRational(1) / (m * m);
  return inv_m2 * (half() * p.square() * pair_sum - contracted);
}

ExactMatrix spin_projection_op(const FourMomentum& p) {
  if (p.at_rest()) throw RestFrameError();
  const auto norm = p.spatial_norm();
  if (!norm) throw IrrationalMomentumError();
  const WaveMatrices& w = wave_matrices();
  ExactMatrix sum(10, 10);
  for (int a = 1; a <= 3; ++a) {
    const Rational& pa = p.spatial()[static_cast<std::size_t>(a - 1)];
    if (sgn(pa) == 0) continue;
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        const int e = levi_civita(a, b, c);
        if (e == 0) continue;
        sum += GaussianRational(Rational(e * pa)) * (w.beta1_of(b) * w.beta1_of(c));
      }
    }
  }
  const GaussianRational scale = GaussianRational(Rational(0), Rational(-1 / *norm));
  return embed(scale * sum, SpaceView::kDim10, SpaceView::kDim11);
}

std::string StateLabel::to_string() const {
  std::ostringstream os;
  os << "eps=" << (eps > 0 ? "+1" : "-1") << " spin=" << spin << " proj=" << (proj > 0 ? "+" : "") << proj;
  return os.str();
}

void validate_label(const StateLabel& label) {
  require_sign(label.eps);
  if (label.spin == 0 && label.proj == 0) return;
  if (label.spin == 1 && label.proj >= -1 && label.proj <= 1) return;
  throw std::invalid_argument("invalid (spin, projection) combination: " + label.to_string());
}

std::array<StateLabel, 4> state_labels(int eps) {
  require_sign(eps);
  return {StateLabel{eps, 1, 1}, StateLabel{eps, 1, -1}, StateLabel{eps, 1, 0}, StateLabel{eps, 0, 0}};
}

ProjectorFamily ProjectorFamily::build(const FourMomentum& p) {
  ExactMatrix sigma2 = spin_squared(p);
  ExactMatrix spin1 = half() * sigma2;
  ExactMatrix spin0 = identity11() - spin1;
  ProjectorFamily f{p,
                    p_slash(p),
                    energy_projector(p, 1),
                    energy_projector(p, -1),
                    std::move(sigma2),
                    std::move(spin0),
                    std::move(spin1),
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    {}};
  if (p.at_rest()) return f;

  ExactMatrix sp = spin_projection_op(p);
  const ExactMatrix sp2 = sp * sp;
  f.proj_plus = half() * (sp2 + sp);
  f.proj_minus = half() * (sp2 - sp);
  f.proj_zero = identity11() - sp2;
  f.sigma_p = std::move(sp);
  for (int eps : {1, -1}) {
    for (const StateLabel& label : state_labels(eps)) {
      f.deltas.emplace(label, f.energy(eps) * f.spin_square_projector(label.spin) *
                                  f.projection_projector(label.proj));
    }
  }
  return f;
}

const ExactMatrix& ProjectorFamily::energy(int eps) const {
  require_sign(eps);
  return eps > 0 ? m_plus : m_minus;
}

const ExactMatrix& ProjectorFamily::delta(const StateLabel& label) const {
  validate_label(label);
  auto it = deltas.find(label);
  if (it == deltas.end()) throw RestFrameError();
  return it->second;
}

const ExactMatrix& ProjectorFamily::spin_square_projector(int spin) const {
  if (spin == 0) return spin0;
  if (spin == 1) return spin1;
  throw std::invalid_argument("spin must be 0 or 1");
}

const ExactMatrix& ProjectorFamily::projection_projector(int proj) const {
  if (!sigma_p) throw RestFrameError();
  switch (proj) {
    case 1: return *proj_plus;
    case -1: return *proj_minus;
    case 0: return *proj_zero;
    default: throw std::invalid_argument("projection must be -1, 0 or +1");
  }
}

ExactMatrix pure_state_projector(const FourMomentum& p, const StateLabel& label) {
  validate_label(label);
  const ExactMatrix sp = spin_projection_op(p);
  const ExactMatrix sp2 = sp * sp;
  const ExactMatrix s1 = half() * spin_squared(p);
  const ExactMatrix spin = label.spin == 1 ? s1 : identity11() - s1;
  ExactMatrix proj;
  switch (label.proj) {
    case 1: proj = half() * (sp2 + sp); break;
    case -1: proj = half() * (sp2 - sp); break;
    default: proj = identity11() - sp2; break;
  }
  return energy_projector(p, label.eps) * spin * proj;
}

ExactMatrix SolutionDyad::reassemble() const { return GaussianRational(scale_sq) * (psi * psi_bar); }

GaussianRational SolutionDyad::bar_times_psi() const { return GaussianRational(scale_sq) * (psi_bar * psi)(0, 0); }

SolutionDyad dyad_factorize(const ExactMatrix& delta, const StateLabel& labels) {
  if (delta.rows() != kDim || delta.cols() != kDim) throw std::invalid_argument("dyad needs an 11x11 matrix");
  if (rank(delta) != 1 || !(delta * delta == delta)) throw std::invalid_argument("not a pure state");

  std::size_t best = 0;
  Rational best_norm = -1;
  for (std::size_t c = 0; c < kDim; ++c) {
    Rational n = 0;
    for (std::size_t r = 0; r < kDim; ++r) n += delta(r, c).norm();
    if (n > best_norm) {
      best_norm = n;
      best = c;
    }
  }
  ExactMatrix w(kDim, 1);
  for (std::size_t r = 0; r < kDim; ++r) w(r, 0) = delta(r, best);

  const ExactMatrix& eta = wave_matrices().eta;
  const GaussianRational n = (w.adjoint() * eta * w)(0, 0);
  if (!n.is_real() || n.is_zero()) throw std::invalid_argument("not a pure state: null eta-norm");
  const int sign = sgn(n.re()) > 0 ? 1 : -1;
  const Rational target = 1 / abs(n.re());

  SolutionDyad d;
  d.labels = labels;
  d.norm_sign = sign;
  if (auto root = rational_sqrt(target)) {
    d.psi = GaussianRational(*root) * w;
  } else if (auto split = sum_of_two_squares(target)) {
    d.psi = GaussianRational(split->first, split->second) * w;
  } else {
    d.psi = w;
    d.scale_sq = target;
  }
  d.psi_bar = GaussianRational(sign) * (d.psi.adjoint() * eta);
  if (!(d.reassemble() == delta)) throw std::invalid_argument("not a pure state: no eta-dyad factorization");
  return d;
}

bool verify_first_order_solution(const ExactMatrix& psi, const FourMomentum& p, int eps) {
  require_sign(eps);
  if (psi.rows() != kDim || psi.cols() != 1) throw std::invalid_argument("solution must be an 11-component column");
  const GaussianRational m = p.mass();
  const GaussianRational e(eps);
  const GaussianRational i = GaussianRational::i();

  const ExactMatrix lhs = -(i * (p_slash(p) * psi));
  if (!(lhs == e * m * psi)) return false;

  auto slot = [&](const BasisIndex& b) { return psi(b.position(), 0); };
  GaussianRational divergence;
  for (int mu = 1; mu <= 4; ++mu) divergence += p.component(mu) * slot(BasisIndex::vector(mu));
  if (!(-m * slot(BasisIndex::scalar()) == i * e * divergence)) return false;

  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = mu + 1; nu <= 4; ++nu) {
      const GaussianRational curl = p.component(mu) * slot(BasisIndex::vector(nu)) -
                                    p.component(nu) * slot(BasisIndex::vector(mu));
      if (!(m * slot(BasisIndex::bivector(mu, nu)) == i * e * curl)) return false;
    }
  }
  return true;
}

bool verify_first_order_solution(const SolutionDyad& d, const FourMomentum& p, int eps) {
  return verify_first_order_solution(d.psi, p, eps);
}

}  // namespace multispin
