#include "multispin/mode_dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace multispin {

namespace {

constexpr int kModes = 4;

template <class C>
C scalar(const GaussianRational& z) {
  return C(z);
}

std::string parameter_label(const U31Generator& g) {
  return g.kind == GeneratorKind::kUnit ? "omega0" : "omega" + g.label().substr(1);
}

void require_mode(int mu) {
  if (mu < 1 || mu > kModes) throw std::out_of_range("mode index must be 1..4");
}

void require_slot(int s) {
  if (s < 0 || s >= kSymbols) throw std::out_of_range("symbol slot must be 0..7");
}

bool is_real(const GaussianRational& z) { return z.is_real(); }
bool is_imag(const GaussianRational& z) { return z.is_imaginary(); }
bool is_real(const JetScalar& z) {
  if (!z.value().is_real()) return false;
  return std::all_of(z.gradient().begin(), z.gradient().end(), [](const auto& kv) { return kv.second.is_real(); });
}
bool is_imag(const JetScalar& z) {
  if (!z.value().is_imaginary()) return false;
  return std::all_of(z.gradient().begin(), z.gradient().end(),
                     [](const auto& kv) { return kv.second.is_imaginary(); });
}

template <class C>
void check_reality_impl(const U31Params<C>& p) {
  const auto& gens = u31_generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const bool ok = gens[k].imaginary_parameter() ? is_imag(p.values[k]) : is_real(p.values[k]);
    if (!ok) {
      throw std::invalid_argument("parameter " + parameter_label(gens[k]) + " must be " +
                                  (gens[k].imaginary_parameter() ? "imaginary" : "real"));
    }
  }
}

ExactMatrix unit4(int mu, int nu) {
  ExactMatrix m(kModes, kModes);
  m(static_cast<std::size_t>(mu - 1), static_cast<std::size_t>(nu - 1)) = 1;
  return m;
}

std::vector<Monomial> all_monomials() {
  std::vector<Monomial> out{Monomial::constant()};
  for (int s = 0; s < kSymbols; ++s) out.push_back(Monomial::linear(s));
  for (int s = 0; s < kSymbols; ++s) {
    for (int t = s; t < kSymbols; ++t) out.push_back(Monomial::quadratic(s, t));
  }
  return out;
}

ExactMatrix monomial_vector(const Observable& o, const std::vector<Monomial>& basis) {
  ExactMatrix v(basis.size(), 1);
  for (std::size_t r = 0; r < basis.size(); ++r) v(r, 0) = o.coefficient(basis[r]);
  return v;
}

ExactMatrix matrix_vector(const ExactMatrix& m) {
  ExactMatrix v(m.rows() * m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) v(r * m.cols() + c, 0) = m(r, c);
  }
  return v;
}

ExactMatrix real_vector(const ExactMatrix& m) {
  const std::size_t n = m.rows() * m.cols();
  ExactMatrix v(2 * n, 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      v(r * m.cols() + c, 0) = m(r, c).re();
      v(n + r * m.cols() + c, 0) = m(r, c).im();
    }
  }
  return v;
}

ExactMatrix columns(const std::vector<ExactMatrix>& vs) {
  ExactMatrix out(vs.front().rows(), vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = vs[c](r, 0);
  }
  return out;
}

StructureTable table_from(const std::vector<U31Generator>& basis,
                          const std::vector<std::vector<std::vector<GaussianRational>>>& c) {
  StructureTable t;
  for (const auto& g : basis) t.labels.push_back(g.label());
  t.c = c;
  return t;
}

}  // namespace

ModeContext::ModeContext(Rational k) : k0(std::move(k)) {
  if (sgn(k0) <= 0) throw std::invalid_argument("mode energy k0 must be positive");
}

std::string symbol_name(int slot) {
  require_slot(slot);
  return slot < kModes ? "q" + std::to_string(slot + 1) : "pi" + std::to_string(slot - 3);
}

// ---- QuadraticObservable ----

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::constant(const C& c) {
  QuadraticObservable o;
  o.add_term(Monomial::constant(), c);
  return o;
}

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::symbol(int slot) {
  require_slot(slot);
  QuadraticObservable o;
  o.add_term(Monomial::linear(slot), C(1));
  return o;
}

template <class C>
C QuadraticObservable<C>::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? C{} : it->second;
}

template <class C>
int QuadraticObservable<C>::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

template <class C>
void QuadraticObservable<C>::add_term(const Monomial& m, const C& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

template <class C>
QuadraticObservable<C>& QuadraticObservable<C>::operator+=(const QuadraticObservable& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

template <class C>
QuadraticObservable<C>& QuadraticObservable<C>::operator-=(const QuadraticObservable& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

template <class C>
QuadraticObservable<C>& QuadraticObservable<C>::operator*=(const C& s) {
  Terms out;
  for (auto& [m, c] : terms_) {
    C v = c * s;
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  terms_ = std::move(out);
  return *this;
}

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::operator-() const {
  QuadraticObservable o;
  for (const auto& [m, c] : terms_) o.terms_.emplace(m, -c);
  return o;
}

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::times(const QuadraticObservable& rhs) const {
  QuadraticObservable out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      if (m1.degree() + m2.degree() > 2) throw std::domain_error("product exceeds degree 2");
      int f[4];
      int n = 0;
      for (int s : {m1.a, m1.b, m2.a, m2.b}) {
        if (s >= 0) f[n++] = s;
      }
      Monomial m = n == 0 ? Monomial::constant() : n == 1 ? Monomial::linear(f[0]) : Monomial::quadratic(f[0], f[1]);
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::derivative(int slot) const {
  require_slot(slot);
  QuadraticObservable out;
  for (const auto& [m, c] : terms_) {
    if (m.a == slot && m.b == slot) {
      out.add_term(Monomial::linear(slot), c * C(2));
    } else if (m.b == slot) {
      out.add_term(m.a < 0 ? Monomial::constant() : Monomial::linear(m.a), c);
    } else if (m.a == slot) {
      out.add_term(Monomial::linear(m.b), c);
    }
  }
  return out;
}

template <class C>
C QuadraticObservable<C>::evaluate(const std::array<C, kSymbols>& point) const {
  C sum{};
  for (const auto& [m, c] : terms_) {
    C v = c;
    if (m.a >= 0) v *= point[static_cast<std::size_t>(m.a)];
    if (m.b >= 0) v *= point[static_cast<std::size_t>(m.b)];
    sum += v;
  }
  return sum;
}

template <class C>
QuadraticObservable<C> QuadraticObservable<C>::substitute(const ExactMatrix& t) const {
  if (t.rows() != kSymbols || t.cols() != kSymbols) throw std::invalid_argument("substitution must be 8x8");
  std::array<QuadraticObservable, kSymbols> image;
  for (int s = 0; s < kSymbols; ++s) {
    for (int u = 0; u < kSymbols; ++u) {
      const GaussianRational& z = t(static_cast<std::size_t>(s), static_cast<std::size_t>(u));
      if (!z.is_zero()) image[static_cast<std::size_t>(s)].add_term(Monomial::linear(u), scalar<C>(z));
    }
  }
  QuadraticObservable out;
  for (const auto& [m, c] : terms_) {
    QuadraticObservable term = constant(c);
    if (m.a >= 0) term = term * image[static_cast<std::size_t>(m.a)];
    if (m.b >= 0) term = term * image[static_cast<std::size_t>(m.b)];
    out += term;
  }
  return out;
}

template <class C>
std::string QuadraticObservable<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m.a >= 0) os << "*" << symbol_name(m.a);
    if (m.b >= 0) os << "*" << symbol_name(m.b);
  }
  return os.str();
}

template class QuadraticObservable<GaussianRational>;
template class QuadraticObservable<JetScalar>;

JetObservable lift(const Observable& o) {
  JetObservable out;
  for (const auto& [m, c] : o.terms()) {
    JetObservable term = JetObservable::constant(JetScalar(c));
    if (m.a >= 0) term = term * JetObservable::symbol(m.a);
    if (m.b >= 0) term = term * JetObservable::symbol(m.b);
    out += term;
  }
  return out;
}

template <class C>
QuadraticObservable<C> poisson_bracket(const QuadraticObservable<C>& f, const QuadraticObservable<C>& g) {
  QuadraticObservable<C> out;
  for (int mu = 1; mu <= kModes; ++mu) {
    out += f.derivative(q_slot(mu)) * g.derivative(pi_slot(mu));
    out -= f.derivative(pi_slot(mu)) * g.derivative(q_slot(mu));
  }
  return out;
}

template Observable poisson_bracket(const Observable&, const Observable&);
template JetObservable poisson_bracket(const JetObservable&, const JetObservable&);

// ---- B variables and the Hamiltonian ----

Observable b_field(int mu, const ModeContext& ctx) {
  require_mode(mu);
  const GaussianRational half = Rational(1, 2);
  return Observable::symbol(q_slot(mu)) * half +
         Observable::symbol(pi_slot(mu)) * GaussianRational(Rational(0), Rational(1 / (2 * ctx.k0)));
}

Observable b_field_dagger(int mu, const ModeContext& ctx) {
  require_mode(mu);
  const GaussianRational half = Rational(1, 2);
  return Observable::symbol(q_slot(mu)) * half +
         Observable::symbol(pi_slot(mu)) * GaussianRational(Rational(0), Rational(-1 / (2 * ctx.k0)));
}

Observable b_bilinear(int alpha, int beta, const ModeContext& ctx) {
  return GaussianRational(Rational(2 * ctx.k0)) * (b_field_dagger(alpha, ctx) * b_field(beta, ctx));
}

Observable b_quadratic_form(const ExactMatrix& m, const ModeContext& ctx) {
  if (m.rows() != kModes || m.cols() != kModes) throw std::invalid_argument("quadratic form needs a 4x4 matrix");
  Observable out;
  for (int a = 1; a <= kModes; ++a) {
    for (int b = 1; b <= kModes; ++b) {
      const GaussianRational& z = m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
      if (!z.is_zero()) out += z * b_bilinear(a, b, ctx);
    }
  }
  return out;
}

Observable hamiltonian(const ModeContext& ctx) {
  Observable h;
  const GaussianRational half = Rational(1, 2);
  const GaussianRational k2 = Rational(ctx.k0 * ctx.k0);
  for (int mu = 1; mu <= kModes; ++mu) {
    const Observable q = Observable::symbol(q_slot(mu));
    const Observable p = Observable::symbol(pi_slot(mu));
    h += half * (p * p + k2 * (q * q));
  }
  return h;
}

Observable hamiltonian_b_form(const ModeContext& ctx) {
  Observable h;
  const GaussianRational scale = Rational(2 * ctx.k0 * ctx.k0);
  for (int mu = 1; mu <= kModes; ++mu) h += scale * (b_field(mu, ctx) * b_field_dagger(mu, ctx));
  return h;
}

// ---- Generators ----

std::string U31Generator::label() const {
  switch (kind) {
    case GeneratorKind::kUnit: return "J";
    case GeneratorKind::kAntisym: return "J[" + std::to_string(mu) + std::to_string(nu) + "]";
    case GeneratorKind::kSym: return "J(" + std::to_string(mu) + std::to_string(nu) + ")";
  }
  return "?";
}

bool U31Generator::imaginary_parameter() const { return kind != GeneratorKind::kUnit && nu == 4 && mu != 4; }

const std::vector<U31Generator>& u31_generators() {
  static const std::vector<U31Generator> gens = [] {
    std::vector<U31Generator> out{{GeneratorKind::kUnit, 0, 0}};
    for (int mu = 1; mu <= kModes; ++mu) {
      for (int nu = mu + 1; nu <= kModes; ++nu) out.push_back({GeneratorKind::kAntisym, mu, nu});
    }
    for (int mu = 1; mu <= kModes; ++mu) {
      for (int nu = mu; nu <= kModes; ++nu) out.push_back({GeneratorKind::kSym, mu, nu});
    }
    return out;
  }();
  return gens;
}

std::size_t generator_position(const U31Generator& g) {
  const auto& gens = u31_generators();
  auto it = std::find(gens.begin(), gens.end(), g);
  if (it == gens.end()) throw std::invalid_argument("not a canonical U(3,1) generator: " + g.label());
  return static_cast<std::size_t>(it - gens.begin());
}

ExactMatrix u31_generator(const U31Generator& g) {
  const GaussianRational i = GaussianRational::i();
  switch (g.kind) {
    case GeneratorKind::kUnit: return i * ExactMatrix::identity(kModes);
    case GeneratorKind::kAntisym:
      require_mode(g.mu);
      require_mode(g.nu);
      if (g.mu == g.nu) throw std::invalid_argument("I_[mu nu] needs mu != nu");
      return unit4(g.mu, g.nu) - unit4(g.nu, g.mu);
    case GeneratorKind::kSym: {
      require_mode(g.mu);
      require_mode(g.nu);
      ExactMatrix m = unit4(g.mu, g.nu) + unit4(g.nu, g.mu);
      if (g.mu == g.nu) m -= GaussianRational(Rational(1, 2)) * ExactMatrix::identity(kModes);
      return i * m;
    }
  }
  throw std::logic_error("unknown generator kind");
}

ExactMatrix u31_real_form(const U31Generator& g) {
  ExactMatrix m = u31_generator(g);
  return g.imaginary_parameter() ? GaussianRational::i() * m : m;
}

ExactMatrix charge_matrix(const U31Generator& g) {
  const GaussianRational i = GaussianRational::i();
  switch (g.kind) {
    case GeneratorKind::kUnit: return -i * u31_generator(g);
    case GeneratorKind::kAntisym: return i * u31_generator(g);
    case GeneratorKind::kSym: return -i * u31_generator(g);
  }
  throw std::logic_error("unknown generator kind");
}

// ---- Parameters ----

template <class C>
C U31Params<C>::antisym(int mu, int nu) const {
  if (mu == nu) return C{};
  if (mu < nu) return values[generator_position({GeneratorKind::kAntisym, mu, nu})];
  return -values[generator_position({GeneratorKind::kAntisym, nu, mu})];
}

template <class C>
C U31Params<C>::sym(int mu, int nu) const {
  return values[generator_position({GeneratorKind::kSym, std::min(mu, nu), std::max(mu, nu)})];
}

template <class C>
C U31Params<C>::sym_trace() const {
  C t{};
  for (int mu = 1; mu <= kModes; ++mu) t += sym(mu, mu);
  return t;
}

template struct U31Params<GaussianRational>;
template struct U31Params<JetScalar>;

void check_reality(const U31Params<GaussianRational>& p) { check_reality_impl(p); }
void check_reality(const U31Params<JetScalar>& p) { check_reality_impl(p); }

U31Params<JetScalar> jet_direction(const U31Generator& g) {
  U31Params<JetScalar> p;
  const GaussianRational scale = g.imaginary_parameter() ? GaussianRational::i() : GaussianRational(1);
  p.at(g) = JetScalar::variable(parameter_label(g), {}, scale);
  return p;
}

// ---- Canonical transformation ----

template <class C, class S>
std::array<S, kSymbols> infinitesimal_transform(const std::array<S, kSymbols>& state, const U31Params<C>& p,
                                                const ModeContext& ctx) {
  const C k = scalar<C>(ctx.k0);
  const C inv_k = scalar<C>(Rational(1 / ctx.k0));
  const C quarter_trace = p.sym_trace() * scalar<C>(Rational(1, 4));
  const C w0 = p.omega0();
  std::array<S, kSymbols> out{};
  for (int mu = 1; mu <= kModes; ++mu) {
    S dq = state[static_cast<std::size_t>(pi_slot(mu))] * (w0 * inv_k);
    S dp = state[static_cast<std::size_t>(q_slot(mu))] * -(k * w0);
    for (int nu = 1; nu <= kModes; ++nu) {
      const C a = p.antisym(mu, nu) * C(2);
      if (!a.is_zero()) {
        dq += state[static_cast<std::size_t>(q_slot(nu))] * a;
        dp += state[static_cast<std::size_t>(pi_slot(nu))] * a;
      }
      C s = p.sym(mu, nu);
      if (mu == nu) s -= quarter_trace;
      if (!s.is_zero()) {
        dq += state[static_cast<std::size_t>(pi_slot(nu))] * (s * C(2) * inv_k);
        dp += state[static_cast<std::size_t>(q_slot(nu))] * -(s * C(2) * k);
      }
    }
    out[static_cast<std::size_t>(q_slot(mu))] = std::move(dq);
    out[static_cast<std::size_t>(pi_slot(mu))] = std::move(dp);
  }
  return out;
}

template std::array<GaussianRational, kSymbols> infinitesimal_transform(const std::array<GaussianRational, kSymbols>&,
                                                                        const U31Params<GaussianRational>&,
                                                                        const ModeContext&);
template std::array<JetScalar, kSymbols> infinitesimal_transform(const std::array<JetScalar, kSymbols>&,
                                                                 const U31Params<JetScalar>&, const ModeContext&);
template std::array<Observable, kSymbols> infinitesimal_transform(const std::array<Observable, kSymbols>&,
                                                                  const U31Params<GaussianRational>&,
                                                                  const ModeContext&);
template std::array<JetObservable, kSymbols> infinitesimal_transform(const std::array<JetObservable, kSymbols>&,
                                                                     const U31Params<JetScalar>&, const ModeContext&);

ExactMatrix variation_matrix(const U31Params<GaussianRational>& p, const ModeContext& ctx) {
  std::array<Observable, kSymbols> symbols;
  for (int s = 0; s < kSymbols; ++s) symbols[static_cast<std::size_t>(s)] = Observable::symbol(s);
  const auto delta = infinitesimal_transform(symbols, p, ctx);
  ExactMatrix v(kSymbols, kSymbols);
  for (int s = 0; s < kSymbols; ++s) {
    for (int t = 0; t < kSymbols; ++t) {
      v(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) =
          delta[static_cast<std::size_t>(s)].coefficient(Monomial::linear(t));
    }
  }
  return v;
}

template <class C>
QuadraticObservable<C> generating_function(const U31Params<C>& p, const ModeContext& ctx) {
  using O = QuadraticObservable<C>;
  const C k = scalar<C>(ctx.k0);
  const C inv_k = scalar<C>(Rational(1 / ctx.k0));
  const C quarter_trace = p.sym_trace() * scalar<C>(Rational(1, 4));
  auto q = [](int mu) { return O::symbol(q_slot(mu)); };
  auto pp = [](int mu) { return O::symbol(pi_slot(mu)); };

  O f;
  O oscillator;
  for (int mu = 1; mu <= kModes; ++mu) {
    f += q(mu) * pp(mu);
    oscillator += (pp(mu) * pp(mu)) * inv_k + (q(mu) * q(mu)) * k;
  }
  f += oscillator * (p.omega0() * scalar<C>(Rational(1, 2)));
  for (int mu = 1; mu <= kModes; ++mu) {
    for (int nu = 1; nu <= kModes; ++nu) {
      const C a = p.antisym(mu, nu);
      if (!a.is_zero()) f += (pp(mu) * q(nu) - pp(nu) * q(mu)) * a;
      C s = p.sym(mu, nu);
      if (mu == nu) s -= quarter_trace;
      if (!s.is_zero()) f += ((pp(mu) * pp(nu)) * inv_k + (q(mu) * q(nu)) * k) * s;
    }
  }
  return f;
}

template Observable generating_function(const U31Params<GaussianRational>&, const ModeContext&);
template JetObservable generating_function(const U31Params<JetScalar>&, const ModeContext&);

template <class C>
std::array<C, kSymbols> variation_from_generating_function(const QuadraticObservable<C>& f,
                                                           const std::array<C, kSymbols>& state) {
  std::array<C, kSymbols> out{};
  for (int mu = 1; mu <= kModes; ++mu) {
    const auto qi = static_cast<std::size_t>(q_slot(mu));
    const auto pi = static_cast<std::size_t>(pi_slot(mu));
    out[qi] = f.derivative(pi_slot(mu)).evaluate(state) - state[qi];
    out[pi] = -(f.derivative(q_slot(mu)).evaluate(state) - state[pi]);
  }
  return out;
}

template std::array<GaussianRational, kSymbols> variation_from_generating_function(
    const Observable&, const std::array<GaussianRational, kSymbols>&);
template std::array<JetScalar, kSymbols> variation_from_generating_function(const JetObservable&,
                                                                            const std::array<JetScalar, kSymbols>&);

// ---- Charges ----

Observable conserved_charge(const U31Generator& g, const ModeContext& ctx) {
  const GaussianRational k = ctx.k0;
  const GaussianRational inv_k = Rational(1 / ctx.k0);
  auto q = [](int mu) { return Observable::symbol(q_slot(mu)); };
  auto p = [](int mu) { return Observable::symbol(pi_slot(mu)); };
  Observable oscillator;
  for (int a = 1; a <= kModes; ++a) oscillator += inv_k * (p(a) * p(a)) + k * (q(a) * q(a));

  switch (g.kind) {
    case GeneratorKind::kUnit: return GaussianRational(Rational(1, 2)) * oscillator;
    case GeneratorKind::kAntisym: return p(g.mu) * q(g.nu) - p(g.nu) * q(g.mu);
    case GeneratorKind::kSym: {
      Observable j = inv_k * (p(g.mu) * p(g.nu)) + k * (q(g.mu) * q(g.nu));
      if (g.mu == g.nu) j -= GaussianRational(Rational(1, 4)) * oscillator;
      return j;
    }
  }
  throw std::logic_error("unknown generator kind");
}

std::vector<Observable> conserved_charges(const ModeContext& ctx) {
  std::vector<Observable> out;
  for (const auto& g : u31_generators()) out.push_back(conserved_charge(g, ctx));
  return out;
}

Observable conserved_charge_b_form(const U31Generator& g, const ModeContext& ctx) {
  return b_quadratic_form(charge_matrix(g), ctx);
}

template <class C>
QuadraticObservable<C> charge_generator(const U31Params<C>& p, const ModeContext& ctx) {
  QuadraticObservable<C> g;
  for (const auto& gen : u31_generators()) {
    const C& w = p.at(gen);
    if (w.is_zero()) continue;
    const bool doubled = gen.kind != GeneratorKind::kUnit && gen.mu != gen.nu;
    QuadraticObservable<C> j;
    if constexpr (std::is_same_v<C, GaussianRational>) {
      j = conserved_charge(gen, ctx);
    } else {
      j = lift(conserved_charge(gen, ctx));
    }
    g += j * (doubled ? w * C(2) : w);
  }
  return g;
}

template Observable charge_generator(const U31Params<GaussianRational>&, const ModeContext&);
template JetObservable charge_generator(const U31Params<JetScalar>&, const ModeContext&);

template <class C>
std::array<C, kSymbols> poisson_flow(const QuadraticObservable<C>& g, const std::array<C, kSymbols>& state) {
  std::array<C, kSymbols> out{};
  for (int s = 0; s < kSymbols; ++s) {
    out[static_cast<std::size_t>(s)] = poisson_bracket(QuadraticObservable<C>::symbol(s), g).evaluate(state);
  }
  return out;
}

template std::array<GaussianRational, kSymbols> poisson_flow(const Observable&,
                                                             const std::array<GaussianRational, kSymbols>&);
template std::array<JetScalar, kSymbols> poisson_flow(const JetObservable&, const std::array<JetScalar, kSymbols>&);

template <class C>
QuadraticObservable<C> first_order_change(const QuadraticObservable<C>& o, const U31Params<C>& p,
                                          const ModeContext& ctx) {
  std::array<QuadraticObservable<C>, kSymbols> symbols;
  for (int s = 0; s < kSymbols; ++s) symbols[static_cast<std::size_t>(s)] = QuadraticObservable<C>::symbol(s);
  const auto delta = infinitesimal_transform(symbols, p, ctx);
  QuadraticObservable<C> out;
  for (int s = 0; s < kSymbols; ++s) out += o.derivative(s) * delta[static_cast<std::size_t>(s)];
  return out;
}

template Observable first_order_change(const Observable&, const U31Params<GaussianRational>&, const ModeContext&);
template JetObservable first_order_change(const JetObservable&, const U31Params<JetScalar>&, const ModeContext&);

ExactMatrix b_form_transform(const ExactMatrix& u, const ModeContext& ctx) {
  if (u.rows() != kModes || u.cols() != kModes) throw std::invalid_argument("U must be 4x4");
  // q' = Re U q - Im U pi / k0,  pi' = k0 Im U q + Re U pi
  ExactMatrix t(kSymbols, kSymbols);
  for (std::size_t r = 0; r < kModes; ++r) {
    for (std::size_t c = 0; c < kModes; ++c) {
      const Rational& re = u(r, c).re();
      const Rational& im = u(r, c).im();
      t(r, c) = re;
      t(r, c + kModes) = Rational(-im / ctx.k0);
      t(r + kModes, c) = Rational(ctx.k0 * im);
      t(r + kModes, c + kModes) = re;
    }
  }
  return t;
}

// ---- Structure constants ----

std::vector<U31Generator> structure_basis() {
  std::vector<U31Generator> out;
  for (const auto& g : u31_generators()) {
    if (g.kind == GeneratorKind::kSym && g.mu == 4 && g.nu == 4) continue;
    out.push_back(g);
  }
  return out;
}

StructureTable matrix_structure_constants() {
  const auto basis = structure_basis();
  std::vector<ExactMatrix> mats, vecs;
  for (const auto& g : basis) {
    mats.push_back(charge_matrix(g));
    vecs.push_back(matrix_vector(mats.back()));
  }
  const ExactMatrix a = columns(vecs);
  const std::size_t n = basis.size();
  std::vector<std::vector<std::vector<GaussianRational>>> c(n, std::vector<std::vector<GaussianRational>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto sol = solve(a, matrix_vector(commutator(mats[x], mats[y])));
      if (!sol) throw std::logic_error("generator commutator left the span");
      for (std::size_t z = 0; z < n; ++z) c[x][y].push_back((*sol)(z, 0));
    }
  }
  return table_from(basis, c);
}

std::optional<std::vector<GaussianRational>> charge_coordinates(const Observable& o, const ModeContext& ctx) {
  const auto basis = structure_basis();
  const auto monomials = all_monomials();
  std::vector<ExactMatrix> vecs;
  for (const auto& g : basis) vecs.push_back(monomial_vector(conserved_charge(g, ctx), monomials));
  auto sol = solve(columns(vecs), monomial_vector(o, monomials));
  if (!sol) return std::nullopt;
  std::vector<GaussianRational> out;
  for (std::size_t z = 0; z < basis.size(); ++z) out.push_back((*sol)(z, 0));
  return out;
}

StructureTable charge_structure_constants(const ModeContext& ctx) {
  const auto basis = structure_basis();
  std::vector<Observable> charges;
  for (const auto& g : basis) charges.push_back(conserved_charge(g, ctx));
  const std::size_t n = basis.size();
  std::vector<std::vector<std::vector<GaussianRational>>> c(n, std::vector<std::vector<GaussianRational>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto coords = charge_coordinates(poisson_bracket(charges[x], charges[y]), ctx);
      if (!coords) throw std::logic_error("charge bracket left the charge span");
      c[x][y] = std::move(*coords);
    }
  }
  return table_from(basis, c);
}

std::size_t real_span_dimension(const std::vector<ExactMatrix>& ms) {
  if (ms.empty()) return 0;
  std::vector<ExactMatrix> vecs;
  for (const auto& m : ms) vecs.push_back(real_vector(m));
  return rank(columns(vecs));
}

bool closes_over_reals(const std::vector<ExactMatrix>& ms) {
  if (ms.empty()) return true;
  std::vector<ExactMatrix> vecs;
  for (const auto& m : ms) vecs.push_back(real_vector(m));
  const ExactMatrix a = columns(vecs);
  for (const auto& x : ms) {
    for (const auto& y : ms) {
      if (!solve(a, real_vector(commutator(x, y)))) return false;
    }
  }
  return true;
}

}  // namespace multispin
