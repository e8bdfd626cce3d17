#include "multispin/fock_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace multispin {

namespace {

Rational factorial(int n) {
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

int total(const Occupation& n) { return std::accumulate(n.begin(), n.end(), 0); }

void check_mode(int mode) {
  if (mode < 0 || mode > 4) throw std::out_of_range("ladder mode must be 0..4");
}

// Raise or lower slot `k` of every monomial; `lower` multiplies by the exponent.
FockPolyState shift(const FockPolyState& s, int k, bool raise, const GaussianRational& factor) {
  FockPolyState out(s.truncation(), s.scheme());
  for (const auto& [n, c] : s.terms()) {
    Occupation m = n;
    if (raise) {
      m[k] += 1;
      if (total(m) > s.truncation()) {
        throw TruncationOverflow("creation beyond truncation N=" + std::to_string(s.truncation()));
      }
      out.add(m, factor * c);
    } else {
      if (n[k] == 0) continue;
      m[k] -= 1;
      out.add(m, factor * c * GaussianRational(n[k]));
    }
  }
  return out;
}

}  // namespace

std::string scheme_name(Scheme s) { return s == Scheme::kVacuum1 ? "1" : "2"; }

Scheme parse_scheme(const std::string& text) {
  if (text == "1") return Scheme::kVacuum1;
  if (text == "2") return Scheme::kVacuum2;
  throw std::invalid_argument("scheme must be 1 or 2, got '" + text + "'");
}

FockPolyState::FockPolyState(int truncation, Scheme scheme) : truncation_(truncation), scheme_(scheme) {
  if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
}

FockPolyState FockPolyState::vacuum(int truncation, Scheme scheme) {
  return monomial({0, 0, 0, 0}, truncation, scheme);
}

FockPolyState FockPolyState::monomial(const Occupation& n, int truncation, Scheme scheme) {
  FockPolyState s(truncation, scheme);
  s.add(n, 1);
  return s;
}

GaussianRational FockPolyState::coefficient(const Occupation& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? GaussianRational() : it->second;
}

int FockPolyState::degree() const {
  int d = 0;
  for (const auto& [n, c] : terms_) d = std::max(d, total(n));
  return d;
}

void FockPolyState::add(const Occupation& n, const GaussianRational& c) {
  for (int k : n) {
    if (k < 0) throw std::invalid_argument("negative occupation");
  }
  if (total(n) > truncation_) {
    throw TruncationOverflow("occupation beyond truncation N=" + std::to_string(truncation_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockPolyState& FockPolyState::operator+=(const FockPolyState& rhs) {
  if (scheme_ != rhs.scheme_) throw std::invalid_argument("scheme mismatch");
  for (const auto& [n, c] : rhs.terms_) add(n, c);
  return *this;
}

FockPolyState& FockPolyState::operator-=(const FockPolyState& rhs) {
  if (scheme_ != rhs.scheme_) throw std::invalid_argument("scheme mismatch");
  for (const auto& [n, c] : rhs.terms_) add(n, -c);
  return *this;
}

FockPolyState& FockPolyState::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, c] : terms_) c *= s;
  return *this;
}

bool operator==(const FockPolyState& a, const FockPolyState& b) {
  return a.scheme_ == b.scheme_ && a.terms_ == b.terms_;
}

std::string FockPolyState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")|" << n[0] << n[1] << n[2] << ";" << n[3] << ">";
  }
  return os.str();
}

std::vector<Occupation> occupations_up_to(int n) {
  std::vector<Occupation> out;
  for (int d = 0; d <= n; ++d) {
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
      }
    }
  }
  return out;
}

bool LadderOp::creates(Scheme s) const {
  check_mode(mode);
  if ((mode == 0 || mode == 4) && s == Scheme::kVacuum1) return !dagger;
  return dagger;
}

std::string LadderOp::to_string() const { return "b" + std::to_string(mode) + (dagger ? "+" : ""); }

FockPolyState apply_ladder(const LadderOp& op, const FockPolyState& s) {
  check_mode(op.mode);
  if (op.mode >= 1 && op.mode <= 3) return shift(s, op.mode - 1, op.dagger, 1);
  // b_0 sector on slot 3.  Scheme 2: b0+ = z, b0 = -d.  Scheme 1: b0 = z, b0+ = d.
  const bool raise = op.creates(s.scheme());
  GaussianRational factor = 1;
  if (s.scheme() == Scheme::kVacuum2 && !op.dagger) factor = -1;
  if (op.mode == 4) factor *= GaussianRational::i();
  return shift(s, 3, raise, factor);
}

FockOperator FockOperator::identity() { return word({}); }

FockOperator FockOperator::ladder(const LadderOp& op) { return word({op}); }

FockOperator FockOperator::word(std::vector<LadderOp> w, GaussianRational c) {
  for (const auto& op : w) check_mode(op.mode);
  FockOperator out;
  if (!c.is_zero()) out.terms_.push_back({std::move(c), std::move(w)});
  return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs) {
  for (const auto& t : rhs.terms_) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& u) { return u.word == t.word; });
    if (it == terms_.end()) {
      terms_.push_back(t);
      continue;
    }
    it->coeff += t.coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  }
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& rhs) {
  FockOperator neg = rhs;
  neg *= -1;
  return *this += neg;
}

FockOperator& FockOperator::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  FockOperator out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      std::vector<LadderOp> w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      out += FockOperator::word(std::move(w), ta.coeff * tb.coeff);
    }
  }
  return out;
}

FockPolyState FockOperator::apply(const FockPolyState& s) const {
  FockPolyState out(s.truncation(), s.scheme());
  for (const auto& t : terms_) {
    FockPolyState v = s;
    for (auto it = t.word.rbegin(); it != t.word.rend() && !v.is_zero(); ++it) v = apply_ladder(*it, v);
    out += t.coeff * v;
  }
  return out;
}

std::string FockOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.to_string() << ")";
    for (const auto& op : t.word) os << " " << op.to_string();
  }
  return os.str();
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator normal_ordered(const FockOperator& op, Scheme s) {
  FockOperator out;
  for (const auto& t : op.terms()) {
    std::vector<LadderOp> w = t.word;
    std::stable_partition(w.begin(), w.end(), [s](const LadderOp& x) { return x.creates(s); });
    out += FockOperator::word(std::move(w), t.coeff);
  }
  return out;
}

Rational monomial_norm(const Occupation& n, Scheme s) {
  Rational r = 1;
  for (int k : n) r *= factorial(k);
  if (s == Scheme::kVacuum2 && n[3] % 2 == 1) r = -r;
  return r;
}

GaussianRational inner_product(const FockPolyState& a, const FockPolyState& b) {
  if (a.scheme() != b.scheme()) throw std::invalid_argument("inner product across vacuum schemes");
  GaussianRational sum;
  for (const auto& [n, c] : a.terms()) {
    auto it = b.terms().find(n);
    if (it == b.terms().end()) continue;
    sum += c.conj() * it->second * GaussianRational(monomial_norm(n, a.scheme()));
  }
  return sum;
}

ExactMatrix gram_matrix(int n, Scheme s) {
  const auto occ = occupations_up_to(n);
  ExactMatrix g(occ.size(), occ.size());
  for (std::size_t r = 0; r < occ.size(); ++r) {
    for (std::size_t c = 0; c < occ.size(); ++c) {
      const auto a = FockPolyState::monomial(occ[r], n, s);
      const auto b = FockPolyState::monomial(occ[c], n, s);
      Rational scale = 1;
      for (int k : occ[r]) scale *= factorial(k);
      g(r, c) = inner_product(a, b) / GaussianRational(scale);
    }
  }
  return g;
}

std::optional<GaussianRational> eigenvalue(const FockOperator& op, const FockPolyState& s) {
  if (s.is_zero()) return std::nullopt;
  const FockPolyState image = op.apply(s);
  const auto& [n0, c0] = *s.terms().begin();
  const GaussianRational lambda = image.coefficient(n0) / c0;
  if (image == lambda * s) return lambda;
  return std::nullopt;
}

bool same_action(const FockOperator& a, const FockOperator& b, int n, Scheme s, int headroom) {
  for (const auto& occ : occupations_up_to(n)) {
    const auto v = FockPolyState::monomial(occ, n + headroom, s);
    if (!(a.apply(v) == b.apply(v))) return false;
  }
  return true;
}

EnergyOperator energy_operator(const Rational& k0, Scheme s) {
  FockOperator raw;
  for (int a = 1; a <= 3; ++a) raw += FockOperator::word({LadderOp::b_dag(a), LadderOp::b(a)});
  raw -= FockOperator::word({LadderOp::b_dag(0), LadderOp::b(0)});
  raw *= GaussianRational(k0);
  EnergyOperator e{normal_ordered(raw, s), GaussianRational()};
  // Normal-ordered bilinears annihilate the vacuum, so the dropped c-number
  // is the vacuum expectation of the raw operator.
  e.vacuum_constant = raw.apply(FockPolyState::vacuum(2, s)).coefficient({0, 0, 0, 0});
  return e;
}

FockOperator quadratic_form_operator(const ExactMatrix& m, Scheme s) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("quadratic form needs a 4x4 matrix");
  FockOperator out;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const GaussianRational& c = m(a - 1, b - 1);
      if (c.is_zero()) continue;
      out += FockOperator::word({LadderOp::b_dag(a), LadderOp::b(b)}, c);
    }
  }
  return normal_ordered(out, s);
}

std::optional<ExactMatrix> quadratic_form_matrix(const Observable& o, const ModeContext& ctx) {
  std::vector<Observable> basis;
  std::set<Monomial> monomials;
  for (const auto& [mono, c] : o.terms()) monomials.insert(mono);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      ExactMatrix e(4, 4);
      e(a, b) = 1;
      basis.push_back(b_quadratic_form(e, ctx));
      for (const auto& [mono, c] : basis.back().terms()) monomials.insert(mono);
    }
  }
  const std::vector<Monomial> rows(monomials.begin(), monomials.end());
  ExactMatrix lhs(rows.size(), basis.size());
  ExactMatrix rhs(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) lhs(r, c) = basis[c].coefficient(rows[r]);
    rhs(r, 0) = o.coefficient(rows[r]);
  }
  const auto x = solve(lhs, rhs);
  if (!x) return std::nullopt;
  ExactMatrix m(4, 4);
  for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = (*x)(k, 0);
  return m;
}

FockOperator quantize(const Observable& o, const ModeContext& ctx, Scheme s) {
  const auto m = quadratic_form_matrix(o, ctx);
  if (!m) throw std::invalid_argument("observable is not of the form b+ M b: " + o.to_string());
  return quadratic_form_operator(*m, s);
}

std::vector<FockOperator> quantum_charges(Scheme s) {
  std::vector<FockOperator> out;
  for (const auto& g : u31_generators()) out.push_back(quadratic_form_operator(charge_matrix(g), s));
  return out;
}

FockOperator quantum_hamiltonian(const Rational& k0, Scheme s) {
  return quadratic_form_operator(GaussianRational(k0) * ExactMatrix::identity(4), s);
}

PhysicalSplit decompose_physical(const FockPolyState& s) {
  if (s.scheme() != Scheme::kVacuum2) throw std::invalid_argument("physical decomposition is defined in scheme 2");
  PhysicalSplit split{FockPolyState(s.truncation(), s.scheme()), FockPolyState(s.truncation(), s.scheme())};
  for (const auto& [n, c] : s.terms()) (n[3] == 0 ? split.physical : split.nonphysical).add(n, c);
  return split;
}

}  // namespace multispin
