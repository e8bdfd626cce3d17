#include "multispin/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "multispin/em_reduction.hpp"
#include "multispin/epsilon_algebra.hpp"
#include "multispin/mode_dynamics.hpp"
#include "multispin/spin_projectors.hpp"
#include "multispin/wave_algebra.hpp"

namespace multispin {

namespace {

using Witness = std::optional<Json>;

class Recorder {
 public:
  explicit Recorder(std::string prefix) : prefix_(std::move(prefix)) {}

  void check(const std::string& id, const std::string& anchor, const std::function<Witness()>& body) {
    CheckRecord r;
    r.id = prefix_ + id;
    r.anchor = anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (Witness w = body()) {
        r.status = CheckStatus::kFail;
        r.witness = std::move(*w);
      }
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.witness = Json{{"exception", e.what()}};
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    records_.push_back(std::move(r));
  }

  void skip(const std::string& id, const std::string& anchor, const std::string& reason) {
    CheckRecord r;
    r.id = prefix_ + id;
    r.anchor = anchor;
    r.status = CheckStatus::kSkip;
    r.reason = reason;
    records_.push_back(std::move(r));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::string prefix_;
  std::vector<CheckRecord> records_;
};

// First nonzero entry of a residual, or nullopt.
Witness nonzero_entry(const ExactMatrix& m, Json context = Json::object()) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      context["row"] = r;
      context["col"] = c;
      context["value"] = m(r, c).to_string();
      return context;
    }
  }
  return std::nullopt;
}

Witness unequal(const ExactMatrix& a, const ExactMatrix& b, Json context = Json::object()) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    context["shape_mismatch"] = true;
    return context;
  }
  return nonzero_entry(a - b, std::move(context));
}

Witness unequal_scalar(const GaussianRational& got, const GaussianRational& want, Json context = Json::object()) {
  if (got == want) return std::nullopt;
  context["got"] = got.to_string();
  context["want"] = want.to_string();
  return context;
}

Json occupation_json(const Occupation& n) { return Json::array({n[0], n[1], n[2], n[3]}); }

const std::array<std::array<int, 2>, 6>& lorentz_pairs() {
  static const std::array<std::array<int, 2>, 6> pairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  return pairs;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkip:
      return "skip";
  }
  return "?";
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kAlgebra:
      return "algebra";
    case Suite::kProjectors:
      return "projectors";
    case Suite::kU31:
      return "u31";
    case Suite::kFock:
      return "fock";
    case Suite::kEm:
      return "em";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::kAlgebra, Suite::kProjectors, Suite::kU31, Suite::kFock, Suite::kEm};
  return suites;
}

std::array<Rational, 3> parse_momentum(std::string_view text) {
  std::array<Rational, 3> p;
  std::size_t k = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (k == 3) throw ConfigError("momentum needs exactly three components");
    try {
      p[k++] = parse_rational(part);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad momentum component '" + std::string(part) + "': " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (k != 3) throw ConfigError("momentum needs exactly three components");
  return p;
}

void SuiteConfig::validate() const {
  if (suites.empty()) throw ConfigError("no suites selected");
  if (k0 <= 0) throw ConfigError("k0 must be positive");
  if (truncation < 2) throw ConfigError("truncation must be at least 2");
  if (schemes.empty()) throw ConfigError("no vacuum scheme selected");
  if (workers == 0) throw ConfigError("worker count must be positive");
  std::optional<FourMomentum> p;
  try {
    p = FourMomentum::on_shell(mass, momentum);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const bool projectors = std::find(suites.begin(), suites.end(), Suite::kProjectors) != suites.end();
  if (projectors && !p->at_rest() && !p->spatial_norm()) throw ConfigError(IrrationalMomentumError().what());
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

bool VerificationReport::all_pass() const { return count(CheckStatus::kFail) == 0; }

Json VerificationReport::to_json(bool timing) const {
  Json recs = Json::array();
  for (const auto& r : records) {
    Json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = status_name(r.status);
    j["witness"] = r.witness;
    if (r.status == CheckStatus::kSkip) j["reason"] = r.reason;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    recs.push_back(std::move(j));
  }
  Json out;
  out["records"] = std::move(recs);
  out["summary"] = {{"total", records.size()},
                    {"passed", count(CheckStatus::kPass)},
                    {"failed", count(CheckStatus::kFail)},
                    {"skipped", count(CheckStatus::kSkip)}};
  return out;
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& r : records) {
    std::string status(status_name(r.status));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << status << "  " << r.id << "  [" << r.anchor << "]";
    if (r.status == CheckStatus::kSkip) os << "  reason: " << r.reason;
    if (r.status == CheckStatus::kFail) os << "  witness: " << r.witness.dump();
    if (timing) os << "  (" << static_cast<long>(r.elapsed_ms) << " ms)";
    os << "\n";
  }
  os << count(CheckStatus::kPass) << " passed, " << count(CheckStatus::kFail) << " failed, "
     << count(CheckStatus::kSkip) << " skipped\n";
  return os.str();
}

std::vector<CheckRecord> epsilon_checks() {
  Recorder rec("algebra.epsilon.");
  for (SpaceView view : {SpaceView::kDim4, SpaceView::kDim5, SpaceView::kDim10, SpaceView::kDim11}) {
    const std::string name(view_name(view));
    rec.check("product." + name, "entire-algebra product rule", [view]() -> Witness {
      const auto labels = members(view);
      for (const auto& a : labels) {
        for (const auto& b : labels) {
          const ExactMatrix ab = epsilon(a, b, view);
          for (const auto& c : labels) {
            for (const auto& d : labels) {
              const ExactMatrix want = GaussianRational(basis_delta(b, c)) * epsilon(a, d, view);
              if (!(ab * epsilon(c, d, view) == want)) {
                return Json{{"a", a.label()}, {"b", b.label()}, {"c", c.label()}, {"d", d.label()}};
              }
            }
          }
        }
      }
      return std::nullopt;
    });
    rec.check("completeness." + name, "entire-algebra unit decomposition",
              [view] { return unequal(identity_of(view), ExactMatrix::identity(dimension(view))); });
  }
  return rec.take();
}

std::vector<CheckRecord> pdk_checks() {
  Recorder rec("algebra.pdk.");
  const WaveMatrices& w = wave_matrices();
  const auto all_triples = [](std::span<const ExactMatrix, 4> beta) -> Witness {
    for (int mu = 1; mu <= 4; ++mu) {
      for (int nu = 1; nu <= 4; ++nu) {
        for (int a = 1; a <= 4; ++a) {
          if (auto wit = nonzero_entry(pdk_residual(beta, mu, nu, a), {{"mu", mu}, {"nu", nu}, {"alpha", a}})) {
            return wit;
          }
        }
      }
    }
    return std::nullopt;
  };
  rec.check("beta1", "PDK trilinear relation, spin 1", [&] { return all_triples(w.beta1); });
  rec.check("beta0", "PDK trilinear relation, spin 0", [&] { return all_triples(w.beta0); });
  rec.check("alpha-negative-control", "PDK relation fails for the 11-dim matrices", [&]() -> Witness {
    int failing = 0;
    for (int mu = 1; mu <= 4; ++mu) {
      for (int nu = 1; nu <= 4; ++nu) {
        for (int a = 1; a <= 4; ++a) failing += pdk_residual(w.alpha, mu, nu, a).is_zero() ? 0 : 1;
      }
    }
    if (failing > 0) return std::nullopt;
    return Json{{"failing_triples", 0}};
  });
  return rec.take();
}

std::vector<CheckRecord> cubic_checks() {
  Recorder rec("algebra.cubic.");
  rec.check("alpha", "cubic algebra of the 11-dim matrices", []() -> Witness {
    const WaveMatrices& w = wave_matrices();
    for (int mu = 1; mu <= 4; ++mu) {
      for (int nu = 1; nu <= 4; ++nu) {
        for (int a = 1; a <= 4; ++a) {
          if (auto wit = nonzero_entry(cubic_residual(w.alpha, mu, nu, a), {{"mu", mu}, {"nu", nu}, {"alpha", a}})) {
            return wit;
          }
        }
      }
    }
    return std::nullopt;
  });
  return rec.take();
}

std::vector<CheckRecord> lorentz_checks() {
  Recorder rec("algebra.lorentz.");
  const WaveMatrices& w = wave_matrices();
  rec.check("closure", "Lorentz generator commutators", [&]() -> Witness {
    const auto& pairs = lorentz_pairs();
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      for (std::size_t y = x + 1; y < pairs.size(); ++y) {
        const auto [r, s] = pairs[x];
        const auto [m, n] = pairs[y];
        if (auto wit = nonzero_entry(lorentz_closure_residual(w, r, s, m, n),
                                     {{"first", {r, s}}, {"second", {m, n}}})) {
          return wit;
        }
      }
    }
    return std::nullopt;
  });
  rec.check("covariance", "alpha transforms as a four-vector", [&]() -> Witness {
    for (int l = 1; l <= 4; ++l) {
      for (const auto& [m, n] : lorentz_pairs()) {
        if (auto wit = nonzero_entry(alpha_covariance_residual(w, l, m, n), {{"lambda", l}, {"pair", {m, n}}})) {
          return wit;
        }
      }
    }
    return std::nullopt;
  });
  return rec.take();
}

std::vector<CheckRecord> eta_checks() {
  Recorder rec("algebra.eta.");
  const WaveMatrices& w = wave_matrices();
  rec.check("spatial-anticommute", "eta anticommutes with spatial alpha", [&]() -> Witness {
    for (int i = 1; i <= 3; ++i) {
      if (auto wit = nonzero_entry(anticommutator(w.eta, w.alpha_of(i)), {{"i", i}})) return wit;
    }
    return std::nullopt;
  });
  rec.check("alpha4-commute", "eta commutes with alpha_4",
            [&] { return nonzero_entry(commutator(w.eta, w.alpha_of(4))); });
  rec.check("hermitian", "eta is Hermitian", [&] { return unequal(w.eta.adjoint(), w.eta); });
  rec.check("involution", "eta squares to the identity",
            [&] { return unequal(w.eta * w.eta, ExactMatrix::identity(11)); });
  return rec.take();
}

std::vector<CheckRecord> algebra_checks() {
  std::vector<CheckRecord> out;
  for (auto* group : {&epsilon_checks, &pdk_checks, &cubic_checks, &lorentz_checks, &eta_checks}) {
    auto part = group();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<CheckRecord> projector_checks(const Rational& mass, const std::array<Rational, 3>& momentum) {
  Recorder rec("projectors.");
  const FourMomentum p = FourMomentum::on_shell(mass, momentum);
  const ProjectorFamily f = ProjectorFamily::build(p);
  const ExactMatrix id = ExactMatrix::identity(11);

  rec.check("p-hat.cubic", "p-hat minimal equation",
            [&] { return unequal(f.p_hat * f.p_hat * f.p_hat, p.square() * f.p_hat); });
  rec.check("energy.idempotent", "energy projectors are idempotent", [&]() -> Witness {
    for (int eps : {1, -1}) {
      if (auto wit = unequal(f.energy(eps) * f.energy(eps), f.energy(eps), {{"eps", eps}})) return wit;
    }
    return std::nullopt;
  });
  rec.check("energy.orthogonal", "opposite energy projectors annihilate",
            [&] { return nonzero_entry(f.m_plus * f.m_minus); });
  rec.check("energy.rank", "energy projectors have rank 4", [&]() -> Witness {
    for (int eps : {1, -1}) {
      const std::size_t r = rank(f.energy(eps));
      if (r != 4) return Json{{"eps", eps}, {"rank", r}};
    }
    return std::nullopt;
  });
  rec.check("energy.sum", "energy projectors sum to -p-hat^2/m^2", [&] {
    const GaussianRational m2 = Rational(mass * mass);
    return unequal(f.m_plus + f.m_minus, -(GaussianRational(1) / m2) * (f.p_hat * f.p_hat));
  });
  rec.check("spin-squared.minimal", "squared spin minimal equation", [&] {
    return nonzero_entry(f.sigma2 * (f.sigma2 - GaussianRational(2) * id));
  });
  rec.check("spin-squared.projectors", "spin projectors are complementary idempotents", [&]() -> Witness {
    if (auto wit = unequal(f.spin0 + f.spin1, id)) return wit;
    if (auto wit = unequal(f.spin0 * f.spin0, f.spin0, {{"spin", 0}})) return wit;
    if (auto wit = unequal(f.spin1 * f.spin1, f.spin1, {{"spin", 1}})) return wit;
    return nonzero_entry(f.spin0 * f.spin1);
  });
  rec.check("commutators.spin-squared", "spin projectors commute with p-hat", [&]() -> Witness {
    if (auto wit = nonzero_entry(commutator(f.spin0, f.p_hat), {{"spin", 0}})) return wit;
    return nonzero_entry(commutator(f.spin1, f.p_hat), {{"spin", 1}});
  });

  const char* kRest = "rest-frame";
  const std::vector<std::pair<std::string, std::string>> sigma_checks{
      {"spin-projection.minimal", "spin projection minimal equation"},
      {"commutators.spin-projection", "projection operators commute with p-hat and spin projectors"},
      {"delta.idempotent", "pure-state projectors are idempotent"},
      {"delta.rank-one", "pure-state projectors have rank 1"},
      {"delta.orthogonal", "pure-state projectors are pairwise orthogonal"},
      {"delta.resolution", "pure-state projectors sum to the energy projector"},
      {"dyad.reassembly", "dyad reassembles the pure-state projector"},
      {"dyad.bar-form", "conjugate spinor is a signed eta-adjoint"},
      {"dyad.first-order-equation", "dyad spinors solve the first-order equation"},
  };
  if (!f.sigma_p) {
    for (const auto& [id_, anchor] : sigma_checks) rec.skip(id_, anchor, kRest);
    return rec.take();
  }
  const ExactMatrix& sp = *f.sigma_p;
  rec.check(sigma_checks[0].first, sigma_checks[0].second,
            [&] { return nonzero_entry(sp * (sp - id) * (sp + id)); });
  rec.check(sigma_checks[1].first, sigma_checks[1].second, [&]() -> Witness {
    for (int proj : {1, -1, 0}) {
      const ExactMatrix& s = f.projection_projector(proj);
      if (auto wit = nonzero_entry(commutator(s, f.p_hat), {{"proj", proj}, {"with", "p-hat"}})) return wit;
      for (int spin : {0, 1}) {
        if (auto wit = nonzero_entry(commutator(f.spin_square_projector(spin), s), {{"proj", proj}, {"spin", spin}})) {
          return wit;
        }
      }
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[2].first, sigma_checks[2].second, [&]() -> Witness {
    for (const auto& [label, d] : f.deltas) {
      if (auto wit = unequal(d * d, d, {{"label", label.to_string()}})) return wit;
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[3].first, sigma_checks[3].second, [&]() -> Witness {
    for (const auto& [label, d] : f.deltas) {
      const std::size_t r = rank(d);
      if (r != 1) return Json{{"label", label.to_string()}, {"rank", r}};
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[4].first, sigma_checks[4].second, [&]() -> Witness {
    for (const auto& [a, da] : f.deltas) {
      for (const auto& [b, db] : f.deltas) {
        if (a == b) continue;
        if (auto wit = nonzero_entry(da * db, {{"first", a.to_string()}, {"second", b.to_string()}})) return wit;
      }
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[5].first, sigma_checks[5].second, [&]() -> Witness {
    for (int eps : {1, -1}) {
      ExactMatrix sum(11, 11);
      for (const auto& label : state_labels(eps)) sum += f.delta(label);
      if (auto wit = unequal(sum, f.energy(eps), {{"eps", eps}})) return wit;
    }
    return std::nullopt;
  });
  std::vector<std::pair<StateLabel, SolutionDyad>> dyads;
  for (const auto& [label, d] : f.deltas) dyads.emplace_back(label, dyad_factorize(d, label));
  rec.check(sigma_checks[6].first, sigma_checks[6].second, [&]() -> Witness {
    for (const auto& [label, d] : dyads) {
      if (auto wit = unequal(d.reassemble(), f.delta(label), {{"label", label.to_string()}})) return wit;
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[7].first, sigma_checks[7].second, [&]() -> Witness {
    const ExactMatrix& eta = wave_matrices().eta;
    for (const auto& [label, d] : dyads) {
      if (auto wit = unequal(d.psi_bar, GaussianRational(d.norm_sign) * (d.psi.adjoint() * eta),
                             {{"label", label.to_string()}})) {
        return wit;
      }
      if (auto wit = unequal_scalar(d.bar_times_psi(), 1, {{"label", label.to_string()}})) return wit;
    }
    return std::nullopt;
  });
  rec.check(sigma_checks[8].first, sigma_checks[8].second, [&]() -> Witness {
    for (const auto& [label, d] : dyads) {
      if (!verify_first_order_solution(d, p, label.eps)) return Json{{"label", label.to_string()}};
    }
    return std::nullopt;
  });
  return rec.take();
}

std::vector<CheckRecord> u31_checks(const Rational& k0) {
  Recorder rec("u31.");
  const ModeContext ctx(k0);
  const Observable h = hamiltonian(ctx);
  const auto& gens = u31_generators();

  rec.check("hamiltonian.forms", "Hamiltonian in canonical and ladder variables", [&]() -> Witness {
    if (h == hamiltonian_b_form(ctx)) return std::nullopt;
    return Json{{"difference", (h - hamiltonian_b_form(ctx)).to_string()}};
  });
  rec.check("charges.conserved", "charges Poisson-commute with H", [&]() -> Witness {
    for (const auto& g : gens) {
      const Observable b = poisson_bracket(conserved_charge(g, ctx), h);
      if (!b.is_zero()) return Json{{"generator", g.label()}, {"bracket", b.to_string()}};
    }
    return std::nullopt;
  });
  rec.check("charges.ladder-form", "charges as ladder bilinears", [&]() -> Witness {
    for (const auto& g : gens) {
      if (!(conserved_charge(g, ctx) == conserved_charge_b_form(g, ctx))) return Json{{"generator", g.label()}};
    }
    return std::nullopt;
  });
  rec.check("generating-function.jets", "generating function reproduces the transformation", [&]() -> Witness {
    const std::array<std::array<GaussianRational, kSymbols>, 2> states{{
        {1, -2, 3, Rational(1, 2), 2, 1, -1, 3},
        {GaussianRational(1, 1), 0, GaussianRational(Rational(2, 3), Rational(-1)), 4, -1,
         GaussianRational(0, 2), 5, GaussianRational(Rational(-1, 2), Rational(1, 3))},
    }};
    for (const auto& g : gens) {
      const U31Params<JetScalar> dir = jet_direction(g);
      const JetObservable f = generating_function(dir, ctx);
      for (std::size_t s = 0; s < states.size(); ++s) {
        std::array<JetScalar, kSymbols> state;
        for (std::size_t k = 0; k < kSymbols; ++k) state[k] = JetScalar(states[s][k]);
        const auto from_f = variation_from_generating_function(f, state);
        const auto direct = infinitesimal_transform(state, dir, ctx);
        for (std::size_t k = 0; k < kSymbols; ++k) {
          if (!(from_f[k] == direct[k])) return Json{{"direction", g.label()}, {"state", s}, {"slot", symbol_name(k)}};
        }
      }
    }
    return std::nullopt;
  });
  rec.check("first-order.invariance", "H invariant to first order in every direction", [&]() -> Witness {
    const JetObservable hj = lift(h);
    for (const auto& g : gens) {
      if (!first_order_change(hj, jet_direction(g), ctx).is_zero()) return Json{{"direction", g.label()}};
    }
    return std::nullopt;
  });
  rec.check("structure-constants", "charge brackets match generator commutators", [&]() -> Witness {
    const StructureTable m = matrix_structure_constants();
    const StructureTable c = charge_structure_constants(ctx);
    const GaussianRational minus_i(Rational(0), Rational(-1));
    for (std::size_t x = 0; x < m.c.size(); ++x) {
      for (std::size_t y = 0; y < m.c.size(); ++y) {
        for (std::size_t z = 0; z < m.c.size(); ++z) {
          if (!(c.c[x][y][z] == minus_i * m.c[x][y][z])) {
            return Json{{"a", m.labels[x]}, {"b", m.labels[y]}, {"c", m.labels[z]}};
          }
        }
      }
    }
    return std::nullopt;
  });
  rec.check("real-form.closure", "generators span a closed 16-dim real algebra", [&]() -> Witness {
    std::vector<ExactMatrix> forms;
    for (const auto& g : gens) forms.push_back(u31_real_form(g));
    const std::size_t dim = real_span_dimension(forms);
    if (dim != 16) return Json{{"dimension", dim}};
    if (!closes_over_reals(forms)) return Json{{"closed", false}};
    return std::nullopt;
  });
  return rec.take();
}

std::vector<CheckRecord> fock_checks(const Rational& k0, int n, const std::vector<Scheme>& schemes) {
  std::vector<CheckRecord> out;
  const auto basis = occupations_up_to(n);
  for (Scheme s : schemes) {
    Recorder rec("fock.scheme" + scheme_name(s) + ".");
    const auto state = [&](const Occupation& occ, int trunc) { return FockPolyState::monomial(occ, trunc, s); };
    const auto ladder_identity = [&](int mode, const GaussianRational& value) -> Witness {
      const FockOperator c = commutator(FockOperator::ladder(LadderOp::b(mode)), FockOperator::ladder(LadderOp::b_dag(mode)));
      for (const auto& occ : occupations_up_to(n - 1)) {
        const auto v = state(occ, n);
        if (!(c.apply(v) == value * v)) return Json{{"mode", mode}, {"state", occupation_json(occ)}};
      }
      return std::nullopt;
    };
    rec.check("ladder.b0", "[b0, b0+] = -1", [&] { return ladder_identity(0, -1); });
    rec.check("ladder.unit", "[b_mu, b_mu+] = 1 for mu = 1..4", [&]() -> Witness {
      for (int mode = 1; mode <= 4; ++mode) {
        if (auto wit = ladder_identity(mode, 1)) return wit;
      }
      return std::nullopt;
    });
    rec.check("gram.diagonal", s == Scheme::kVacuum2 ? "Gram matrix diagonal (-1)^n" : "positive Gram matrix",
              [&]() -> Witness {
                const ExactMatrix g = gram_matrix(n, s);
                for (std::size_t r = 0; r < basis.size(); ++r) {
                  for (std::size_t c = 0; c < basis.size(); ++c) {
                    int want = 0;
                    if (r == c) want = (s == Scheme::kVacuum2 && basis[r][3] % 2 == 1) ? -1 : 1;
                    if (!(g(r, c) == GaussianRational(want))) {
                      return Json{{"row", occupation_json(basis[r])}, {"col", occupation_json(basis[c])}};
                    }
                  }
                }
                return std::nullopt;
              });
    const EnergyOperator e = energy_operator(k0, s);
    rec.check("energy.spectrum", s == Scheme::kVacuum2 ? "P0 eigenvalues k0(m+n)" : "P0 eigenvalues k0(m-n)",
              [&]() -> Witness {
                for (const auto& occ : basis) {
                  const int m = occ[0] + occ[1] + occ[2];
                  const int sign = s == Scheme::kVacuum2 ? 1 : -1;
                  const auto ev = eigenvalue(e.op, state(occ, n));
                  const GaussianRational want = Rational(k0 * (m + sign * occ[3]));
                  if (!ev) return Json{{"state", occupation_json(occ)}, {"eigenvector", false}};
                  if (auto wit = unequal_scalar(*ev, want, {{"state", occupation_json(occ)}})) return wit;
                }
                return std::nullopt;
              });
    if (s == Scheme::kVacuum2) {
      rec.check("energy.non-negative", "P0 spectrum non-negative", [&]() -> Witness {
        for (const auto& occ : basis) {
          const auto ev = eigenvalue(e.op, state(occ, n));
          if (!ev || !ev->is_real() || ev->re() < 0) return Json{{"state", occupation_json(occ)}};
        }
        return std::nullopt;
      });
    } else {
      rec.check("energy.indefinite", "P0 spectrum indefinite", [&]() -> Witness {
        for (const auto& occ : basis) {
          const auto ev = eigenvalue(e.op, state(occ, n));
          if (ev && ev->is_real() && ev->re() < 0) return std::nullopt;
        }
        return Json{{"negative_eigenvalue", false}};
      });
    }
    rec.check("energy.vacuum-constant", "normal-ordering constant of P0", [&] {
      return unequal_scalar(e.vacuum_constant, s == Scheme::kVacuum2 ? Rational(0) : Rational(-k0));
    });
    rec.check("charges.conserved", "[J, H] = 0 for all quantum charges", [&]() -> Witness {
      const FockOperator h = quantum_hamiltonian(k0, s);
      const auto charges = quantum_charges(s);
      // Scheme 1 charges mixing b0 with b_a create in pairs.
      const int headroom = s == Scheme::kVacuum1 ? 4 : 0;
      for (std::size_t k = 0; k < charges.size(); ++k) {
        if (!same_action(commutator(charges[k], h), FockOperator(), n, s, headroom)) {
          return Json{{"generator", u31_generators()[k].label()}};
        }
      }
      return std::nullopt;
    });
    if (s != Scheme::kVacuum2) {
      auto part = rec.take();
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      continue;
    }
    rec.check("physical.decomposition", "orthogonal physical/non-physical split", [&]() -> Witness {
      std::vector<FockPolyState> samples;
      for (const auto& occ : basis) samples.push_back(state(occ, n));
      for (int variant = 1; variant <= 3; ++variant) {
        FockPolyState mix(n, s);
        long k = 0;
        for (const auto& occ : basis) {
          ++k;
          if ((k + variant) % 3 == 0) continue;
          mix.add(occ, GaussianRational(Rational(k % 7 - 3, variant), Rational((k * variant) % 5 - 2)));
        }
        samples.push_back(std::move(mix));
      }
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const PhysicalSplit split = decompose_physical(samples[k]);
        if (!(split.physical + split.nonphysical == samples[k])) return Json{{"sample", k}, {"sum", false}};
        if (!inner_product(split.physical, split.nonphysical).is_zero()) return Json{{"sample", k}, {"orthogonal", false}};
        const GaussianRational norm = inner_product(split.physical, split.physical);
        if (!norm.is_real() || norm.re() < 0) return Json{{"sample", k}, {"physical_norm", norm.to_string()}};
        for (const auto& [occ, c] : split.nonphysical.terms()) {
          if (occ[3] == 0) return Json{{"sample", k}, {"nonphysical_has", occupation_json(occ)}};
        }
      }
      return std::nullopt;
    });
    const ModeContext ctx(k0);
    const auto basis_gens = structure_basis();
    std::vector<FockOperator> ops;
    for (const auto& g : basis_gens) ops.push_back(quadratic_form_operator(charge_matrix(g), s));
    rec.check("quantization.structure", "[A^, B^] = i {A, B}^ on the charge algebra", [&]() -> Witness {
      const StructureTable t = charge_structure_constants(ctx);
      for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          FockOperator rhs;
          for (std::size_t c = 0; c < ops.size(); ++c) rhs += t.c[a][b][c] * ops[c];
          if (!same_action(commutator(ops[a], ops[b]), GaussianRational::i() * rhs, n, s)) {
            return Json{{"a", t.labels[a]}, {"b", t.labels[b]}};
          }
        }
      }
      return std::nullopt;
    });
    rec.check("truncation.exactness", "commutators unchanged at truncation N+2", [&]() -> Witness {
      for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          const FockOperator c = commutator(ops[a], ops[b]);
          for (const auto& occ : basis) {
            if (!(c.apply(state(occ, n)) == c.apply(state(occ, n + 2)))) {
              return Json{{"a", basis_gens[a].label()}, {"b", basis_gens[b].label()}, {"state", occupation_json(occ)}};
            }
          }
        }
      }
      return std::nullopt;
    });
    auto part = rec.take();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<CheckRecord> em_checks(const Rational& k0, int n) {
  Recorder rec("em.");
  const FockOperator h = em_hamiltonian(k0);
  const auto j = su2_charges();
  std::vector<FockPolyState> basis;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) basis.push_back(polarization_state({{{a, b}, 1}}, n));
  }
  const auto act_same = [&](const FockOperator& x, const FockOperator& y) {
    return std::all_of(basis.begin(), basis.end(), [&](const FockPolyState& v) { return x.apply(v) == y.apply(v); });
  };

  rec.check("hamiltonian.number", "H eigenvalues k0(m1+m2)", [&]() -> Witness {
    for (const auto& v : basis) {
      const auto& [occ, c] = *v.terms().begin();
      const auto ev = eigenvalue(h, v);
      if (!ev) return Json{{"state", occupation_json(occ)}};
      if (auto wit = unequal_scalar(*ev, Rational(k0 * (occ[0] + occ[1])), {{"state", occupation_json(occ)}})) {
        return wit;
      }
    }
    return std::nullopt;
  });
  rec.check("hamiltonian.j0", "H = 2 k0 J0", [&]() -> Witness {
    if (act_same(h, GaussianRational(Rational(2 * k0)) * j[0])) return std::nullopt;
    return Json::object();
  });
  rec.check("su2.commutators", "[J_i, J_j] = i eps_ijk J_k", [&]() -> Witness {
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& c : cyc) {
      if (!act_same(commutator(j[c[0]], j[c[1]]), GaussianRational::i() * j[c[2]])) return Json{{"i", c[0]}, {"j", c[1]}};
    }
    return std::nullopt;
  });
  rec.check("su2.central", "[J_i, J0] = 0", [&]() -> Witness {
    for (int k = 1; k <= 3; ++k) {
      if (!act_same(commutator(j[k], j[0]), FockOperator())) return Json{{"i", k}};
    }
    return std::nullopt;
  });
  rec.check("charges.conserved", "[J_i, H] = 0", [&]() -> Witness {
    for (int k = 0; k <= 3; ++k) {
      if (!act_same(commutator(j[k], h), FockOperator())) return Json{{"i", k}};
    }
    return std::nullopt;
  });

  const auto half = [](long c, long s, long d) { return HalfAngle::make(Rational(c, d), Rational(s, d)); };
  const std::vector<std::pair<std::string, U2Element>> elements{
      {"dual(3/5,4/5)", dual_rotation(Rational(3, 5), Rational(4, 5))},
      {"phase(i)", U2Element::make(half(0, 1, 1), {Rational(0), Rational(0), Rational(1)}, HalfAngle{})},
      {"axis(3/5,0,4/5)", U2Element::make(HalfAngle{}, {Rational(3, 5), Rational(0), Rational(4, 5)}, half(5, 12, 13))},
      {"axis(1/3,2/3,2/3)",
       U2Element::make(half(4, 3, 5), {Rational(1, 3), Rational(2, 3), Rational(2, 3)}, half(8, 15, 17))},
      {"i-tau3", U2Element::make(HalfAngle{}, {Rational(0), Rational(0), Rational(1)}, half(0, 1, 1))},
      {"axis(2/7,3/7,6/7)",
       U2Element::make(half(-1, 0, 1), {Rational(2, 7), Rational(3, 7), Rational(6, 7)}, half(7, 24, 25))},
  };
  rec.check("u2.invariance", "H invariant under U(2)", [&]() -> Witness {
    for (const auto& [name, u] : elements) {
      const ExactMatrix m = u.matrix();
      if (!(m.adjoint() * m == ExactMatrix::identity(2))) return Json{{"element", name}, {"unitary", false}};
      std::vector<FockPolyState> images;
      for (const auto& v : basis) {
        images.push_back(apply_mode_unitary(m, v));
        if (!(h.apply(images.back()) == apply_mode_unitary(m, h.apply(v)))) {
          return Json{{"element", name}, {"commutes", false}};
        }
      }
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (!(inner_product(images[a], images[b]) == inner_product(basis[a], basis[b]))) {
            return Json{{"element", name}, {"isometry", false}};
          }
        }
      }
    }
    return std::nullopt;
  });
  rec.check("stokes.basis", "Stokes parameters of one-photon states", [&]() -> Witness {
    const std::array<Rational, 4> e1{Rational(1, 2), 0, 0, Rational(1, 2)};
    const std::array<Rational, 4> e2{Rational(1, 2), 0, 0, Rational(-1, 2)};
    const std::array<Rational, 4> zero{0, 0, 0, 0};
    if (stokes_expectations(polarization_state({{{1, 0}, 1}}, n)) != e1) return Json{{"state", "mode 1"}};
    if (stokes_expectations(polarization_state({{{0, 1}, 1}}, n)) != e2) return Json{{"state", "mode 2"}};
    if (stokes_expectations(FockPolyState::vacuum(n, Scheme::kVacuum2)) != zero) return Json{{"state", "vacuum"}};
    return std::nullopt;
  });
  rec.check("stokes.homomorphism", "Stokes rotation is a group homomorphism", [&]() -> Witness {
    for (const auto& [a, u] : elements) {
      for (const auto& [b, v] : elements) {
        if (auto wit = unequal(stokes_rotation(u.matrix() * v.matrix()),
                               stokes_rotation(u.matrix()) * stokes_rotation(v.matrix()), {{"u", a}, {"v", b}})) {
          return wit;
        }
      }
    }
    return std::nullopt;
  });
  const Rational c(3, 5), s(4, 5);
  const U2Element d = dual_rotation(c, s);
  rec.check("dual.matrix", "dual transformation is a real rotation", [&]() -> Witness {
    ExactMatrix want(2, 2);
    want(0, 0) = c;
    want(0, 1) = s;
    want(1, 0) = Rational(-s);
    want(1, 1) = c;
    if (auto wit = unequal(d.matrix(), want)) return wit;
    return unequal(d.matrix(), GaussianRational(c) * pauli(0) + GaussianRational(Rational(0), s) * pauli(2));
  });
  rec.check("dual.group-law", "dual transformations form a subgroup", [&]() -> Witness {
    const std::array<HalfAngle, 4> angles{half(3, 4, 5), half(5, -12, 13), half(8, 15, 17), HalfAngle{}};
    for (const auto& a : angles) {
      for (const auto& b : angles) {
        const HalfAngle sum = a + b;
        if (auto wit = unequal(dual_rotation(a.cos, a.sin).matrix() * dual_rotation(b.cos, b.sin).matrix(),
                               dual_rotation(sum.cos, sum.sin).matrix())) {
          return wit;
        }
      }
    }
    return std::nullopt;
  });
  rec.check("dual.stokes-rotation", "dual transformation rotates the (J3, J1) pair", [&]() -> Witness {
    const Rational cos_t = c * c - s * s, sin_t = 2 * c * s;
    const std::vector<FockPolyState> samples{
        polarization_state({{{1, 0}, 1}}, n),
        polarization_state({{{1, 0}, 2}, {{0, 1}, GaussianRational(Rational(1), Rational(-1))}}, n),
        polarization_state({{{2, 0}, 1}, {{1, 1}, GaussianRational(0, 3)}, {{0, 2}, -1}}, n),
    };
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto b = stokes_expectations(samples[k]);
      const auto a = stokes_expectations(apply_mode_unitary(d.matrix(), samples[k]));
      const bool ok = a[0] == b[0] && a[2] == b[2] && a[3] == Rational(cos_t * b[3] + sin_t * b[1]) &&
                      a[1] == Rational(cos_t * b[1] - sin_t * b[3]);
      if (!ok) return Json{{"sample", k}};
    }
    return std::nullopt;
  });
  return rec.take();
}

std::vector<CheckRecord> injected_failure_checks() {
  Recorder rec("injected.");
  rec.check("alpha-commute", "deliberately false identity", [] {
    const WaveMatrices& w = wave_matrices();
    return unequal(w.alpha_of(1) * w.alpha_of(2), w.alpha_of(2) * w.alpha_of(1));
  });
  return rec.take();
}

VerificationReport run(const SuiteConfig& config) {
  config.validate();
  std::vector<std::function<std::vector<CheckRecord>()>> jobs;
  for (Suite s : config.suites) {
    switch (s) {
      case Suite::kAlgebra:
        jobs.emplace_back(&algebra_checks);
        break;
      case Suite::kProjectors:
        jobs.emplace_back([&] { return projector_checks(config.mass, config.momentum); });
        break;
      case Suite::kU31:
        jobs.emplace_back([&] { return u31_checks(config.k0); });
        break;
      case Suite::kFock:
        jobs.emplace_back([&] { return fock_checks(config.k0, config.truncation, config.schemes); });
        break;
      case Suite::kEm:
        jobs.emplace_back([&] { return em_checks(config.k0, config.truncation); });
        break;
    }
  }
  if (config.inject_failure) jobs.emplace_back(&injected_failure_checks);

  std::vector<std::vector<CheckRecord>> results(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += config.workers) {
    const std::size_t stop = std::min(jobs.size(), start + config.workers);
    if (config.workers == 1) {
      results[start] = jobs[start]();
      continue;
    }
    std::vector<std::future<std::vector<CheckRecord>>> batch;
    for (std::size_t k = start; k < stop; ++k) batch.push_back(std::async(std::launch::async, jobs[k]));
    for (std::size_t k = start; k < stop; ++k) results[k] = batch[k - start].get();
  }
  VerificationReport report;
  for (auto& part : results) {
    report.records.insert(report.records.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  }
  return report;
}

}  // namespace multispin
