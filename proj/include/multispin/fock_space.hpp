#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multispin/exact_matrix.hpp"
#include "multispin/mode_dynamics.hpp"

namespace multispin {

/*
 * Vacuum schemes.  kVacuum2: every b_mu^+ creates, metric (-1)^{n_4}.
 * kVacuum1: b_0 creates and b_0^+ annihilates, positive metric.
 */
enum class Scheme { kVacuum1, kVacuum2 };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& text);

/// Occupations (n_1, n_2, n_3, n_4); n_4 counts quanta of the b_0 sector.
using Occupation = std::array<int, 4>;

class TruncationOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/*
 * State as a polynomial in z_1..z_4: the monomial z^n stands for the
 * unnormalized vector prod (creator_mu)^{n_mu} |0>.  Normalized basis vectors
 * differ by 1/sqrt(n!), which only enters inner products squared.
 */
class FockPolyState {
 public:
  FockPolyState(int truncation, Scheme scheme);
  static FockPolyState vacuum(int truncation, Scheme scheme);
  static FockPolyState monomial(const Occupation& n, int truncation, Scheme scheme);

  int truncation() const { return truncation_; }
  Scheme scheme() const { return scheme_; }
  const std::map<Occupation, GaussianRational>& terms() const { return terms_; }
  GaussianRational coefficient(const Occupation& n) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Adds c z^n; throws TruncationOverflow beyond the truncation.
  void add(const Occupation& n, const GaussianRational& c);

  FockPolyState& operator+=(const FockPolyState& rhs);
  FockPolyState& operator-=(const FockPolyState& rhs);
  FockPolyState& operator*=(const GaussianRational& s);
  friend FockPolyState operator+(FockPolyState a, const FockPolyState& b) { return a += b; }
  friend FockPolyState operator-(FockPolyState a, const FockPolyState& b) { return a -= b; }
  friend FockPolyState operator*(const GaussianRational& s, FockPolyState a) { return a *= s; }
  /// Same scheme and terms; truncation is not compared.
  friend bool operator==(const FockPolyState& a, const FockPolyState& b);

  std::string to_string() const;

 private:
  int truncation_;
  Scheme scheme_;
  std::map<Occupation, GaussianRational> terms_;
};

/// All occupations with total degree <= n, graded then lexicographic.
std::vector<Occupation> occupations_up_to(int n);

/*
 * b_mode or b_mode^+.  Mode 0 is b_0; modes 1..3 are b_a; mode 4 is
 * b_4 = i b_0 (and b_4^+ = i b_0^+).
 */
struct LadderOp {
  int mode = 1;
  bool dagger = false;

  static LadderOp b(int mode) { return {mode, false}; }
  static LadderOp b_dag(int mode) { return {mode, true}; }
  /// Whether this operator raises the degree in the given scheme.
  bool creates(Scheme s) const;
  std::string to_string() const;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

FockPolyState apply_ladder(const LadderOp& op, const FockPolyState& s);

/// Linear combination of ladder words; each word acts right to left.
class FockOperator {
 public:
  struct Term {
    GaussianRational coeff;
    std::vector<LadderOp> word;
  };

  FockOperator() = default;
  static FockOperator identity();
  static FockOperator ladder(const LadderOp& op);
  static FockOperator word(std::vector<LadderOp> w, GaussianRational c = 1);

  const std::vector<Term>& terms() const { return terms_; }

  FockOperator& operator+=(const FockOperator& rhs);
  FockOperator& operator-=(const FockOperator& rhs);
  FockOperator& operator*=(const GaussianRational& s);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(const GaussianRational& s, FockOperator a) { return a *= s; }
  /// Composition: (A B) s = A (B s).
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);

  FockPolyState apply(const FockPolyState& s) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// Moves creators (for the scheme) left of annihilators inside every word,
/// keeping relative order and dropping commutator terms.
FockOperator normal_ordered(const FockOperator& op, Scheme s);

/// <a|b>, antilinear in a.  Throws std::invalid_argument on scheme mismatch.
GaussianRational inner_product(const FockPolyState& a, const FockPolyState& b);
/// <z^n|z^n> = n_1! n_2! n_3! n_4! times (-1)^{n_4} in scheme 2.
Rational monomial_norm(const Occupation& n, Scheme s);
/// Gram matrix of the normalized basis over occupations_up_to(n).
ExactMatrix gram_matrix(int n, Scheme s);

/// op s == lambda s for some lambda; nullopt otherwise (or for s == 0).
std::optional<GaussianRational> eigenvalue(const FockOperator& op, const FockPolyState& s);
/// op a == op b on every basis monomial of degree <= n, in a space truncated
/// at n + headroom.
bool same_action(const FockOperator& a, const FockOperator& b, int n, Scheme s, int headroom = 0);

struct EnergyOperator {
  FockOperator op;                   // normal-ordered
  GaussianRational vacuum_constant;  // c-number removed by the ordering
};

/// P_0 = k0 (sum_a b_a^+ b_a - b_0^+ b_0), normal-ordered for the scheme.
EnergyOperator energy_operator(const Rational& k0, Scheme s);

/// Normal-ordered b^+_a M_ab b_b over modes 1..4 (b_4 = i b_0).
FockOperator quadratic_form_operator(const ExactMatrix& m, Scheme s);
/// M with o == b_quadratic_form(M); nullopt if o is not of that shape.
std::optional<ExactMatrix> quadratic_form_matrix(const Observable& o, const ModeContext& ctx);
/// Classical b^+ M b observable -> normal-ordered operator.  Throws
/// std::invalid_argument for anything else.
FockOperator quantize(const Observable& o, const ModeContext& ctx, Scheme s);

/// The 17 charges in u31_generators() order.
std::vector<FockOperator> quantum_charges(Scheme s);
/// Quantum form of the Hamiltonian: k0 sum_mu b_mu^+ b_mu.
FockOperator quantum_hamiltonian(const Rational& k0, Scheme s);

struct PhysicalSplit {
  FockPolyState physical;
  FockPolyState nonphysical;
};

/// Splits off the n_4 = 0 part.  Scheme 2 only.
PhysicalSplit decompose_physical(const FockPolyState& s);

}  // namespace multispin
