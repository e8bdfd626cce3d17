#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "multispin/exact_matrix.hpp"

namespace multispin {

enum class IndexKind { kScalar, kVector, kBivector };

/*
 * One of the 11 component labels {0; mu = 1..4; [mu nu], mu < nu}.  Layout in
 * the full space is fixed:
 *
 *   0 | 1 2 3 4 | [12] [13] [14] [23] [24] [34]
 *
 * Bivectors are stored once per unordered pair; SignedIndex carries the sign
 * produced by a reversed lookup.
 */
class BasisIndex {
 public:
  static BasisIndex scalar() { return BasisIndex(IndexKind::kScalar, 0, 0); }
  /// mu in 1..4, throws std::out_of_range otherwise.
  static BasisIndex vector(int mu);
  /// Canonical bivector, requires 1 <= mu < nu <= 4.
  static BasisIndex bivector(int mu, int nu);
  /// Position 0..10 in the full layout.
  static BasisIndex from_position(std::size_t position);
  static const std::array<BasisIndex, 11>& all();

  IndexKind kind() const { return kind_; }
  int mu() const { return mu_; }
  int nu() const { return nu_; }
  std::size_t position() const;
  /// "0", "3", "[24]".
  std::string label() const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

 private:
  BasisIndex(IndexKind kind, int mu, int nu) : kind_(kind), mu_(mu), nu_(nu) {}

  IndexKind kind_;
  int mu_;
  int nu_;
};

struct SignedIndex {
  BasisIndex index;
  int sign;  // +1, -1, or 0 for the vanishing pair [mu mu]
};

/// [mu nu] for any order: sign -1 when mu > nu, 0 when mu == nu.
SignedIndex bivector_pair(int mu, int nu);

/// Parses "0", "1".."4", "12", "[21]" etc.  Reversed pairs carry sign -1.
SignedIndex parse_basis_label(std::string_view text);

enum class SpaceView { kDim4, kDim5, kDim10, kDim11 };

std::span<const BasisIndex> members(SpaceView view);
std::size_t dimension(SpaceView view);
std::optional<std::size_t> position_in(SpaceView view, const BasisIndex& index);
std::string_view view_name(SpaceView view);
/// "dim4", "dim5", "dim10", "dim11"; throws std::invalid_argument otherwise.
SpaceView parse_space_view(std::string_view name);

/// (eps^{A,B})_{CD} = delta_{AC} delta_{BD} within the view.  Throws
/// std::out_of_range if A or B is not part of the view.
ExactMatrix epsilon(const BasisIndex& a, const BasisIndex& b, SpaceView view);
/// Signed variant; a zero sign on either side yields the zero matrix.
ExactMatrix epsilon(const SignedIndex& a, const SignedIndex& b, SpaceView view);

/// Antisymmetrized Kronecker delta on canonical labels: 1 iff equal.
int basis_delta(const BasisIndex& a, const BasisIndex& b);

/// Completeness sum eps^{mu,mu} + eps^{0,0} + 1/2 eps^{[mu nu],[mu nu]}
/// restricted to the view.  Throws std::logic_error if it differs from the
/// literal identity.
ExactMatrix identity_of(SpaceView view);

/// Index-inclusion embedding of a matrix on `from` into the larger `to`.
ExactMatrix embed(const ExactMatrix& m, SpaceView from, SpaceView to);

}  // namespace multispin
