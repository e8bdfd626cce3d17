// Command-line front end: verify suites, dump exact matrices, Stokes parameters.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multispin/em_reduction.hpp"
#include "multispin/epsilon_algebra.hpp"
#include "multispin/fock_space.hpp"
#include "multispin/matrix_json.hpp"
#include "multispin/spin_projectors.hpp"
#include "multispin/verification.hpp"
#include "multispin/wave_algebra.hpp"

namespace {

using namespace multispin;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string mass = "4";
  std::string momentum = "0,0,3";
  std::string k0 = "5";
  int truncation = 6;
  std::string scheme = "both";
  unsigned workers = 1;
  bool json = false;
  bool no_timing = false;
  bool inject_failure = false;
  std::string output;

  std::string suite = "all";
  std::string dump_what;
  std::string space = "dim11";
  std::string label_a;
  std::string label_b;
  std::string which = "all";
  int energy_sign = 1;
  int spin = 1;
  int projection = 1;
  std::string state;
};

Rational parse_config_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("bad --" + name + " '" + text + "': " + e.what());
  }
}

std::vector<Scheme> parse_schemes(const std::string& text) {
  if (text == "both") return {Scheme::kVacuum1, Scheme::kVacuum2};
  try {
    return {parse_scheme(text)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig c;
  c.suites = o.suite == "all" ? all_suites() : std::vector<Suite>{parse_suite(o.suite)};
  c.mass = parse_config_rational("mass", o.mass);
  c.momentum = parse_momentum(o.momentum);
  c.k0 = parse_config_rational("k0", o.k0);
  c.truncation = o.truncation;
  c.schemes = parse_schemes(o.scheme);
  c.workers = o.workers;
  c.inject_failure = o.inject_failure;
  return c;
}

Json config_json(const SuiteConfig& c) {
  Json suites = Json::array();
  for (Suite s : c.suites) suites.push_back(suite_name(s));
  Json momentum = Json::array();
  for (const auto& x : c.momentum) momentum.push_back(rational_to_string(x));
  Json schemes = Json::array();
  for (Scheme s : c.schemes) schemes.push_back(scheme_name(s));
  return {{"suites", suites},
          {"mass", rational_to_string(c.mass)},
          {"momentum", momentum},
          {"k0", rational_to_string(c.k0)},
          {"truncation", c.truncation},
          {"schemes", schemes},
          {"inject_failure", c.inject_failure}};
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ConfigError("cannot write " + o.output);
  out << text;
}

int run_verify(const Options& o) {
  const SuiteConfig config = suite_config(o);
  const VerificationReport report = run(config);
  const bool timing = !o.no_timing;
  if (o.json) {
    Json j;
    j["config"] = config_json(config);
    const Json body = report.to_json(timing);
    for (const auto& [key, value] : body.items()) j[key] = value;
    emit(o, j.dump(2) + "\n");
  } else {
    emit(o, report.to_text(timing));
  }
  return report.all_pass() ? kExitPass : kExitFail;
}

Json wave_json(const std::string& which) {
  const WaveMatrices& w = wave_matrices();
  const auto indexed = [](const std::array<ExactMatrix, 4>& ms) {
    Json j;
    for (int mu = 1; mu <= 4; ++mu) j[std::to_string(mu)] = matrix_to_json(ms[mu - 1]);
    return j;
  };
  Json out;
  if (which == "all" || which == "alpha") out["alpha"] = indexed(w.alpha);
  if (which == "all" || which == "beta1") out["beta1"] = indexed(w.beta1);
  if (which == "all" || which == "beta0") out["beta0"] = indexed(w.beta0);
  if (which == "all" || which == "eta") {
    out["eta"] = matrix_to_json(w.eta);
    out["eta1"] = matrix_to_json(w.eta1);
  }
  if (which == "all" || which == "lorentz") {
    Json l;
    const char* names[] = {"[12]", "[13]", "[14]", "[23]", "[24]", "[34]"};
    for (std::size_t k = 0; k < 6; ++k) l[names[k]] = matrix_to_json(w.lorentz[k]);
    out["lorentz"] = l;
  }
  return out;
}

Json solution_json(const Options& o) {
  const FourMomentum p = FourMomentum::on_shell(parse_config_rational("mass", o.mass), parse_momentum(o.momentum));
  const StateLabel label{o.energy_sign, o.spin, o.projection};
  validate_label(label);
  const SolutionDyad d = dyad_factorize(pure_state_projector(p, label), label);
  Json j;
  j["label"] = label.to_string();
  j["psi"] = matrix_to_json(d.psi);
  j["psi_bar"] = matrix_to_json(d.psi_bar);
  j["norm_sign"] = d.norm_sign;
  if (d.scale_sq != 1) j["psi_scale_sq"] = rational_to_string(d.scale_sq);
  return j;
}

Json gram_json(const Options& o) {
  const Scheme s = o.scheme == "both" ? Scheme::kVacuum2 : parse_schemes(o.scheme).front();
  if (o.truncation < 0) throw ConfigError("truncation must be >= 0");
  Json basis = Json::array();
  for (const auto& n : occupations_up_to(o.truncation)) basis.push_back({n[0], n[1], n[2], n[3]});
  Json j;
  j["scheme"] = scheme_name(s);
  j["truncation"] = o.truncation;
  j["basis"] = basis;
  j["gram"] = matrix_to_json(gram_matrix(o.truncation, s));
  return j;
}

int run_dump(const Options& o) {
  Json j;
  if (o.dump_what == "epsilon") {
    const SpaceView view = parse_space_view(o.space);
    j = matrix_to_json(epsilon(parse_basis_label(o.label_a), parse_basis_label(o.label_b), view));
  } else if (o.dump_what == "wave-matrices") {
    j = wave_json(o.which);
  } else if (o.dump_what == "solutions") {
    j = solution_json(o);
  } else {
    j = gram_json(o);
  }
  emit(o, j.dump(2) + "\n");
  return kExitPass;
}

Rational real_part(const Json& a) {
  if (a.is_string()) return parse_rational(a.get<std::string>());
  if (a.is_number_integer()) return Rational(a.get<long>());
  throw ConfigError("amplitude must be a rational string, an integer or [re, im]");
}

GaussianRational amplitude(const Json& a) {
  if (a.is_array() && a.size() == 2) return GaussianRational(real_part(a[0]), real_part(a[1]));
  return real_part(a);
}

int run_stokes(const Options& o) {
  Json entries;
  try {
    entries = Json::parse(o.state);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("--state is not valid JSON: ") + e.what());
  }
  if (!entries.is_array() || entries.empty()) throw ConfigError("--state must be a non-empty JSON array");
  // A bare [n1, n2] is one basis state.
  if (entries[0].is_number_integer()) entries = Json::array({entries});
  std::vector<std::pair<std::array<int, 2>, GaussianRational>> amps;
  int degree = 0;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ConfigError("each state entry is [n1, n2] or [n1, n2, amplitude]");
    }
    const std::array<int, 2> occ{e[0].get<int>(), e[1].get<int>()};
    amps.emplace_back(occ, e.size() == 3 ? amplitude(e[2]) : GaussianRational(1));
    degree = std::max(degree, occ[0] + occ[1]);
  }
  const auto stokes = stokes_expectations(polarization_state(amps, degree));
  if (o.json) {
    Json j;
    for (int k = 0; k <= 3; ++k) j["J" + std::to_string(k)] = rational_to_string(stokes[k]);
    emit(o, j.dump(2) + "\n");
  } else {
    std::string text;
    for (int k = 0; k <= 3; ++k) text += "J" + std::to_string(k) + " = " + rational_to_string(stokes[k]) + "\n";
    emit(o, text);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of the multi-spin 0,1 field algebra"};
  app.set_config("--config", "", "Read options from an INI/TOML file; flags override it");
  app.require_subcommand(1);

  app.add_option("--mass", o.mass, "Mass (rational)")->capture_default_str();
  app.add_option("--momentum", o.momentum, "Spatial momentum px,py,pz (rationals)")->capture_default_str();
  app.add_option("--k0", o.k0, "Mode energy k0 (rational)")->capture_default_str();
  app.add_option("--truncation", o.truncation, "Fock truncation N")->capture_default_str();
  app.add_option("--scheme", o.scheme, "Vacuum scheme")
      ->check(CLI::IsMember({"1", "2", "both"}))
      ->capture_default_str();
  app.add_option("--workers", o.workers, "Parallel suite workers")
      ->envname("MULTISPIN_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--no-timing", o.no_timing, "Omit elapsed times");
  app.add_flag("--inject-failure", o.inject_failure, "Add a deliberately false identity");
  app.add_option("--output", o.output, "Write output to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->fallthrough();
  verify->add_option("suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "algebra", "projectors", "u31", "fock", "em"}))
      ->capture_default_str();

  auto* dump = app.add_subcommand("dump", "Dump exact matrices as JSON");
  dump->fallthrough();
  dump->add_option("what", o.dump_what, "What to dump")
      ->required()
      ->check(CLI::IsMember({"epsilon", "wave-matrices", "solutions", "gram"}));
  dump->add_option("--space", o.space, "Space view for epsilon")->capture_default_str();
  dump->add_option("--a", o.label_a, "Row label for epsilon");
  dump->add_option("--b", o.label_b, "Column label for epsilon");
  dump->add_option("--which", o.which, "Wave matrix family")
      ->check(CLI::IsMember({"all", "alpha", "beta1", "beta0", "eta", "lorentz"}))
      ->capture_default_str();
  dump->add_option("--energy-sign", o.energy_sign, "Energy sign for solutions")->capture_default_str();
  dump->add_option("--spin", o.spin, "Spin for solutions")->capture_default_str();
  dump->add_option("--projection", o.projection, "Spin projection for solutions")->capture_default_str();

  auto* stokes = app.add_subcommand("stokes", "Stokes parameters of a two-mode state");
  stokes->fallthrough();
  stokes->add_option("--state", o.state, "JSON list of [n1, n2] or [n1, n2, amplitude]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    if (dump->parsed()) {
      if (o.dump_what == "epsilon" && (o.label_a.empty() || o.label_b.empty())) {
        throw ConfigError("dump epsilon needs --a and --b");
      }
      return run_dump(o);
    }
    return run_stokes(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
