#include "multispin/epsilon_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace multispin {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

std::vector<BasisIndex> collect(bool scalar, bool vectors, bool bivectors) {
  std::vector<BasisIndex> out;
  if (scalar) out.push_back(BasisIndex::scalar());
  if (vectors) {
    for (int mu = 1; mu <= 4; ++mu) out.push_back(BasisIndex::vector(mu));
  }
  if (bivectors) {
    for (const auto& p : kPairs) out.push_back(BasisIndex::bivector(p[0], p[1]));
  }
  return out;
}

const std::vector<BasisIndex>& view_members(SpaceView view) {
  static const std::vector<BasisIndex> dim4 = collect(false, true, false);
  static const std::vector<BasisIndex> dim5 = collect(true, true, false);
  static const std::vector<BasisIndex> dim10 = collect(false, true, true);
  static const std::vector<BasisIndex> dim11 = collect(true, true, true);
  switch (view) {
    case SpaceView::kDim4: return dim4;
    case SpaceView::kDim5: return dim5;
    case SpaceView::kDim10: return dim10;
    case SpaceView::kDim11: return dim11;
  }
  throw std::invalid_argument("unknown space view");
}

std::size_t require_position(SpaceView view, const BasisIndex& index) {
  auto pos = position_in(view, index);
  if (!pos) {
    throw std::out_of_range("index " + index.label() + " is not part of " + std::string(view_name(view)));
  }
  return *pos;
}

}  // namespace

BasisIndex BasisIndex::vector(int mu) {
  if (mu < 1 || mu > 4) throw std::out_of_range("vector index must be 1..4");
  return BasisIndex(IndexKind::kVector, mu, 0);
}

BasisIndex BasisIndex::bivector(int mu, int nu) {
  if (mu < 1 || nu > 4 || mu >= nu) throw std::out_of_range("bivector label needs 1 <= mu < nu <= 4");
  return BasisIndex(IndexKind::kBivector, mu, nu);
}

BasisIndex BasisIndex::from_position(std::size_t position) {
  if (position >= 11) throw std::out_of_range("basis position must be 0..10");
  return all()[position];
}

const std::array<BasisIndex, 11>& BasisIndex::all() {
  static const std::array<BasisIndex, 11> labels = [] {
    auto v = collect(true, true, true);
    return std::array<BasisIndex, 11>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]};
  }();
  return labels;
}

std::size_t BasisIndex::position() const {
  switch (kind_) {
    case IndexKind::kScalar: return 0;
    case IndexKind::kVector: return static_cast<std::size_t>(mu_);
    case IndexKind::kBivector:
      for (std::size_t k = 0; k < kPairs.size(); ++k) {
        if (kPairs[k][0] == mu_ && kPairs[k][1] == nu_) return 5 + k;
      }
  }
  throw std::logic_error("corrupt BasisIndex");
}

std::string BasisIndex::label() const {
  switch (kind_) {
    case IndexKind::kScalar: return "0";
    case IndexKind::kVector: return std::to_string(mu_);
    case IndexKind::kBivector: return "[" + std::to_string(mu_) + std::to_string(nu_) + "]";
  }
  return "?";
}

SignedIndex bivector_pair(int mu, int nu) {
  if (mu < 1 || mu > 4 || nu < 1 || nu > 4) throw std::out_of_range("bivector indices must be 1..4");
  if (mu == nu) return {BasisIndex::bivector(1, 2), 0};
  if (mu < nu) return {BasisIndex::bivector(mu, nu), 1};
  return {BasisIndex::bivector(nu, mu), -1};
}

SignedIndex parse_basis_label(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != '[' && ch != ']' && ch != ' ') s.push_back(ch);
  }
  auto digit = [&](char ch) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad basis label '" + std::string(text) + "'");
    return ch - '0';
  };
  if (s.size() == 1) {
    int d = digit(s[0]);
    if (d == 0) return {BasisIndex::scalar(), 1};
    return {BasisIndex::vector(d), 1};
  }
  if (s.size() == 2) {
    SignedIndex out = bivector_pair(digit(s[0]), digit(s[1]));
    if (out.sign == 0) throw std::invalid_argument("degenerate bivector label '" + std::string(text) + "'");
    return out;
  }
  throw std::invalid_argument("bad basis label '" + std::string(text) + "'");
}

std::span<const BasisIndex> members(SpaceView view) { return view_members(view); }

std::size_t dimension(SpaceView view) { return view_members(view).size(); }

std::optional<std::size_t> position_in(SpaceView view, const BasisIndex& index) {
  const auto& m = view_members(view);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == index) return k;
  }
  return std::nullopt;
}

std::string_view view_name(SpaceView view) {
  switch (view) {
    case SpaceView::kDim4: return "dim4";
    case SpaceView::kDim5: return "dim5";
    case SpaceView::kDim10: return "dim10";
    case SpaceView::kDim11: return "dim11";
  }
  return "?";
}

SpaceView parse_space_view(std::string_view name) {
  for (SpaceView v : {SpaceView::kDim4, SpaceView::kDim5, SpaceView::kDim10, SpaceView::kDim11}) {
    if (view_name(v) == name) return v;
  }
  throw std::invalid_argument("unknown space view '" + std::string(name) + "'");
}

ExactMatrix epsilon(const BasisIndex& a, const BasisIndex& b, SpaceView view) {
  const std::size_t n = dimension(view);
  ExactMatrix m(n, n);
  m(require_position(view, a), require_position(view, b)) = 1;
  return m;
}

ExactMatrix epsilon(const SignedIndex& a, const SignedIndex& b, SpaceView view) {
  const std::size_t n = dimension(view);
  ExactMatrix m(n, n);
  const int s = a.sign * b.sign;
  if (s != 0) m(require_position(view, a.index), require_position(view, b.index)) = s;
  return m;
}

int basis_delta(const BasisIndex& a, const BasisIndex& b) { return a == b ? 1 : 0; }

ExactMatrix identity_of(SpaceView view) {
  const std::size_t n = dimension(view);
  ExactMatrix sum(n, n);
  const BasisIndex scalar = BasisIndex::scalar();
  if (position_in(view, scalar)) sum += epsilon(scalar, scalar, view);
  if (position_in(view, BasisIndex::vector(1))) {
    for (int mu = 1; mu <= 4; ++mu) sum += epsilon(BasisIndex::vector(mu), BasisIndex::vector(mu), view);
  }
  if (position_in(view, BasisIndex::bivector(1, 2))) {
    // Full double sum over (mu, nu); each pair appears twice, hence the 1/2.
    ExactMatrix bivectors(n, n);
    for (int mu = 1; mu <= 4; ++mu) {
      for (int nu = 1; nu <= 4; ++nu) {
        SignedIndex p = bivector_pair(mu, nu);
        bivectors += epsilon(p, p, view);
      }
    }
    sum += bivectors * GaussianRational(Rational(1, 2));
  }
  if (auto diff = sum.first_difference(ExactMatrix::identity(n))) {
    throw std::logic_error("completeness sum is not the identity at " + diff->describe());
  }
  return sum;
}

ExactMatrix embed(const ExactMatrix& m, SpaceView from, SpaceView to) {
  const auto& src = view_members(from);
  if (m.rows() != src.size() || m.cols() != src.size()) {
    throw std::invalid_argument("embed: matrix does not match the source view dimension");
  }
  std::vector<std::size_t> target(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) target[k] = require_position(to, src[k]);
  const std::size_t n = dimension(to);
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < src.size(); ++r) {
    for (std::size_t c = 0; c < src.size(); ++c) out(target[r], target[c]) = m(r, c);
  }
  return out;
}

}  // namespace multispin
