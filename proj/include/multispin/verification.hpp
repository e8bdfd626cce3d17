#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multispin/fock_space.hpp"
#include "multispin/gaussian_rational.hpp"
#include "multispin/matrix_json.hpp"

namespace multispin {

enum class CheckStatus { kPass, kFail, kSkip };
std::string_view status_name(CheckStatus s);

/// One verified identity.  `witness` is null unless the check failed.
struct CheckRecord {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::kPass;
  Json witness;
  std::string reason;
  double elapsed_ms = 0;
};

/// Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { kAlgebra, kProjectors, kU31, kFock, kEm };
std::string_view suite_name(Suite s);
/// Throws ConfigError for unknown names.
Suite parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct SuiteConfig {
  std::vector<Suite> suites = all_suites();
  Rational mass{4};
  std::array<Rational, 3> momentum{Rational(0), Rational(0), Rational(3)};
  Rational k0{5};
  int truncation = 6;
  std::vector<Scheme> schemes{Scheme::kVacuum1, Scheme::kVacuum2};
  unsigned workers = 1;
  bool inject_failure = false;

  /// Throws ConfigError on an empty suite list, a bad mass shell, irrational
  /// p0 or |p|, k0 <= 0, or a truncation below 2.
  void validate() const;
};

/// "4,0,3/2" -> three rationals.  Throws ConfigError.
std::array<Rational, 3> parse_momentum(std::string_view text);

struct VerificationReport {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const;
  /// True iff nothing failed; skipped checks count as passing.
  bool all_pass() const;
  Json to_json(bool timing) const;
  std::string to_text(bool timing) const;
};

/// Validates the config, runs the selected suites (in parallel when
/// workers > 1) and assembles records in suite order.
VerificationReport run(const SuiteConfig& config);

// Check groups, also used directly by the acceptance runner.
std::vector<CheckRecord> epsilon_checks();
std::vector<CheckRecord> pdk_checks();
std::vector<CheckRecord> cubic_checks();
std::vector<CheckRecord> lorentz_checks();
std::vector<CheckRecord> eta_checks();
std::vector<CheckRecord> algebra_checks();
std::vector<CheckRecord> projector_checks(const Rational& mass, const std::array<Rational, 3>& momentum);
std::vector<CheckRecord> u31_checks(const Rational& k0);
std::vector<CheckRecord> fock_checks(const Rational& k0, int truncation, const std::vector<Scheme>& schemes);
std::vector<CheckRecord> em_checks(const Rational& k0, int truncation);
/// A deliberately false identity (alpha_1 alpha_2 == alpha_2 alpha_1).
std::vector<CheckRecord> injected_failure_checks();

}  // namespace multispin
