#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multispin/exact_matrix.hpp"
#include "multispin/jet.hpp"

namespace multispin {

/// Single mode with energy k0 > 0.
struct ModeContext {
  Rational k0;

  explicit ModeContext(Rational k);
};

// Canonical symbols: q_1..q_4 occupy slots 0..3, pi_1..pi_4 slots 4..7.  The
// generating function reuses the pi slots for the primed momenta.
inline constexpr int kSymbols = 8;
constexpr int q_slot(int mu) { return mu - 1; }
constexpr int pi_slot(int mu) { return mu + 3; }
std::string symbol_name(int slot);

/// Monomial of degree <= 2; absent factors are -1 and a <= b.
struct Monomial {
  int a = -1;
  int b = -1;

  static Monomial constant() { return {}; }
  static Monomial linear(int s) { return {-1, s}; }
  static Monomial quadratic(int s, int t) { return s <= t ? Monomial{s, t} : Monomial{t, s}; }
  int degree() const { return (a >= 0 ? 1 : 0) + (b >= 0 ? 1 : 0); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/*
 * Polynomial of degree <= 2 in the eight canonical symbols.  C is
 * GaussianRational or JetScalar.  Zero coefficients are never stored, so
 * operator== is structural.  Products that would exceed degree 2 throw
 * std::domain_error.
 */
template <class C>
class QuadraticObservable {
 public:
  using Terms = std::map<Monomial, C>;

  QuadraticObservable() = default;
  static QuadraticObservable constant(const C& c);
  static QuadraticObservable symbol(int slot);

  const Terms& terms() const { return terms_; }
  C coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  QuadraticObservable& operator+=(const QuadraticObservable& rhs);
  QuadraticObservable& operator-=(const QuadraticObservable& rhs);
  QuadraticObservable& operator*=(const C& s);
  QuadraticObservable operator-() const;

  friend QuadraticObservable operator+(QuadraticObservable a, const QuadraticObservable& b) { return a += b; }
  friend QuadraticObservable operator-(QuadraticObservable a, const QuadraticObservable& b) { return a -= b; }
  friend QuadraticObservable operator*(QuadraticObservable a, const C& s) { return a *= s; }
  friend QuadraticObservable operator*(const C& s, QuadraticObservable a) { return a *= s; }
  friend QuadraticObservable operator*(const QuadraticObservable& a, const QuadraticObservable& b) {
    return a.times(b);
  }
  friend bool operator==(const QuadraticObservable& a, const QuadraticObservable& b) { return a.terms_ == b.terms_; }

  QuadraticObservable derivative(int slot) const;
  C evaluate(const std::array<C, kSymbols>& point) const;
  /// Symbol s -> sum_t T(s, t) x_t.
  QuadraticObservable substitute(const ExactMatrix& t) const;
  std::string to_string() const;

 private:
  QuadraticObservable times(const QuadraticObservable& rhs) const;
  void add_term(const Monomial& m, const C& c);

  Terms terms_;
};

using Observable = QuadraticObservable<GaussianRational>;
using JetObservable = QuadraticObservable<JetScalar>;

/// Coefficient-wise embedding into jets.
JetObservable lift(const Observable& o);

/// {f, g} = sum_mu df/dq_mu dg/dpi_mu - df/dpi_mu dg/dq_mu.
template <class C>
QuadraticObservable<C> poisson_bracket(const QuadraticObservable<C>& f, const QuadraticObservable<C>& g);

/// B_mu = (q_mu + i pi_mu / k0) / 2 and its partner B+_mu = (q_mu - i pi_mu / k0) / 2,
/// with B_4 standing for i B_0.
Observable b_field(int mu, const ModeContext& ctx);
Observable b_field_dagger(int mu, const ModeContext& ctx);
/// b+_a b_b = 2 k0 B+_a B_b.
Observable b_bilinear(int alpha, int beta, const ModeContext& ctx);
/// Q_M = b+_a M_ab b_b for a 4x4 matrix M.
Observable b_quadratic_form(const ExactMatrix& m, const ModeContext& ctx);

/// 1/2 sum (pi_mu^2 + k0^2 q_mu^2).
Observable hamiltonian(const ModeContext& ctx);
/// sum 2 k0^2 B_mu B+_mu, expanded in (q, pi).
Observable hamiltonian_b_form(const ModeContext& ctx);

enum class GeneratorKind { kUnit, kAntisym, kSym };

/// One of the 17 U(3,1) directions: i I_4, I_[mu nu] (mu < nu) or I_(mu nu) (mu <= nu).
struct U31Generator {
  GeneratorKind kind = GeneratorKind::kUnit;
  int mu = 0;
  int nu = 0;

  std::string label() const;
  /// Parameters with an index 4 paired with a spatial index are imaginary.
  bool imaginary_parameter() const;
  friend bool operator==(const U31Generator&, const U31Generator&) = default;
};

/// Unit, then antisym in layout order, then sym (11)(12)(13)(14)(22)...(44).
const std::vector<U31Generator>& u31_generators();
/// Position of g in u31_generators().
std::size_t generator_position(const U31Generator& g);

/// i I_4, eps^{mu,nu} - eps^{nu,mu}, or i(eps^{mu,nu} + eps^{nu,mu} - 1/2 delta I_4).
ExactMatrix u31_generator(const U31Generator& g);
/// Generator times i when its parameter is imaginary; these span u(3,1) over R.
ExactMatrix u31_real_form(const U31Generator& g);
/// R_X with J_X = b+ R_X b: i I_[mu nu], -i I_(mu nu), I_4.
ExactMatrix charge_matrix(const U31Generator& g);

/*
 * Group parameters, one per generator; antisym values are omega_[mu nu] for
 * mu < nu (reversed order flips sign), sym values are symmetric.
 */
template <class C>
struct U31Params {
  std::array<C, 17> values{};

  C& at(const U31Generator& g) { return values[generator_position(g)]; }
  const C& at(const U31Generator& g) const { return values[generator_position(g)]; }
  C omega0() const { return values[0]; }
  C antisym(int mu, int nu) const;
  C sym(int mu, int nu) const;
  C sym_trace() const;
};

/// Throws std::invalid_argument when a parameter breaks the reality pattern.
void check_reality(const U31Params<GaussianRational>& p);
void check_reality(const U31Params<JetScalar>& p);

/// Jet parameters with d(label) in direction g, scaled by i when imaginary.
U31Params<JetScalar> jet_direction(const U31Generator& g);

/// (dq, dpi) per the canonical infinitesimal transformation; S is a scalar
/// (C itself) or an observable with coefficients in C.
template <class C, class S>
std::array<S, kSymbols> infinitesimal_transform(const std::array<S, kSymbols>& state, const U31Params<C>& p,
                                                const ModeContext& ctx);
/// 8x8 matrix V with (dq, dpi) = V (q, pi).
ExactMatrix variation_matrix(const U31Params<GaussianRational>& p, const ModeContext& ctx);

/// F(q, pi'); the pi slots hold pi'.
template <class C>
QuadraticObservable<C> generating_function(const U31Params<C>& p, const ModeContext& ctx);
/// dq = dF/dpi' - q, dpi = -(dF/dq - pi'), evaluated at pi' = pi.
template <class C>
std::array<C, kSymbols> variation_from_generating_function(const QuadraticObservable<C>& f,
                                                           const std::array<C, kSymbols>& state);

/// Charge in (q, pi) form: pi_mu q_nu - pi_nu q_mu, the symmetric tensor, or
/// J = 1/2 (pi^2 / k0 + k0 q^2).
Observable conserved_charge(const U31Generator& g, const ModeContext& ctx);
std::vector<Observable> conserved_charges(const ModeContext& ctx);
/// Same charge built as b+ R_X b.
Observable conserved_charge_b_form(const U31Generator& g, const ModeContext& ctx);

/// G = omega0 J + sum over all ordered (mu, nu) of omega_[mu nu] J_[mu nu] and
/// omega_(mu nu) J_(mu nu); off-diagonal pairs therefore count twice.
template <class C>
QuadraticObservable<C> charge_generator(const U31Params<C>& p, const ModeContext& ctx);
/// (dq, dpi) = ({q, G}, {pi, G}) at the state.
template <class C>
std::array<C, kSymbols> poisson_flow(const QuadraticObservable<C>& g, const std::array<C, kSymbols>& state);
/// sum_s dO/dx_s dx_s with dx from infinitesimal_transform.
template <class C>
QuadraticObservable<C> first_order_change(const QuadraticObservable<C>& o, const U31Params<C>& p,
                                          const ModeContext& ctx);

/// 8x8 (q, pi) map for B -> U B, B+ -> conj(U) B+.
ExactMatrix b_form_transform(const ExactMatrix& u, const ModeContext& ctx);

/*
 * Structure constants [X_a, X_b] = sum_c c[a][b][c] X_c in a 16-element basis
 * (the 17 generators minus (44), which is minus the sum of the other
 * diagonal symmetric ones).
 */
struct StructureTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<GaussianRational>>> c;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// Basis used by both tables.
std::vector<U31Generator> structure_basis();
/// Commutator table of the charge matrices R_X.
StructureTable matrix_structure_constants();
/// Poisson-bracket table of the charges; equals -i times the matrix table.
StructureTable charge_structure_constants(const ModeContext& ctx);
/// Coordinates of an observable in the charge basis; nullopt outside the span.
std::optional<std::vector<GaussianRational>> charge_coordinates(const Observable& o, const ModeContext& ctx);

/// Real dimension of the real span of the given 4x4 matrices.
std::size_t real_span_dimension(const std::vector<ExactMatrix>& ms);
/// True iff every pairwise commutator stays in the real span.
bool closes_over_reals(const std::vector<ExactMatrix>& ms);

}  // namespace multispin
