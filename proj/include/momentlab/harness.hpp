#ifndef MOMENTLAB_HARNESS_HPP
#define MOMENTLAB_HARNESS_HPP

// Config-driven experiment runner and report emitter.

#include "momentlab/orbit_lab.hpp"
#include "momentlab/representation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace momentlab::harness {

using nlohmann::json;

inline constexpr const char* kToolVersion = "momentlab 1.0.0";

/// Syntax or schema violation in a config document. `field` names the
/// offending key (empty for syntax errors).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ExperimentKind { validity, equivariance, rank, cocycle, pullback, sphere_survey, orbit_survey, expectation };

enum class ReportFormat { csv, json };

std::string to_string(ExperimentKind kind);
std::string to_string(ReportFormat format);
ReportFormat parse_format(const std::string& text);

/// Catalog kinds accepted under "rep": su2 {j}, heisenberg {N}, circle {k},
/// direct_sum {parts}, custom {path}.
struct RepresentationSpec {
  json document;  // the validated "rep" object, echoed into reports
};

struct ExperimentTolerances {
  double defect = 1e-10;
  double rank = 1e-8;
  double fd_step = 1e-5;
  std::optional<double> equivariance;  // default 1e-9, or 1e-8 on truncated Heisenberg
  double pullback = 1e-8;
  double orbit_spread = 1e-9;
  double validity = 1e-12;
  double expectation = 1e-12;
};

struct ExperimentConfig {
  RepresentationSpec rep;
  ExperimentKind experiment = ExperimentKind::validity;
  std::size_t samples = 50;
  std::size_t trials = 200;
  std::size_t words = 50;
  int length = 3;
  double scale = 1.0;
  std::uint64_t seed = 0;
  std::optional<std::string> casimir;
  std::optional<StateVector<double>> x0;
  ExperimentTolerances tolerances;
  std::optional<std::string> out;
  ReportFormat format = ReportFormat::json;

  /// Normalized config with defaults applied.
  json echo() const;
};

/// Parses and validates a config document. `default_seed` applies when the
/// document has no "seed".
ExperimentConfig parse_config(const std::string& text, std::uint64_t default_seed = 0);

Representation<double> build_representation(const json& rep_spec);

struct CheckRecord {
  std::string operation;
  std::string inputs_digest;
  double defect = 0;
  double tolerance = 0;
  bool pass = false;
};

struct Report {
  json config;
  std::string experiment;
  std::string representation;
  std::vector<CheckRecord> checks;
  std::optional<SurveyReport> survey;
  std::vector<ExpectationRow> expectation;

  bool pass() const;
};

Report run_experiment(const ExperimentConfig& cfg);

json report_to_json(const Report& report);
std::string serialize_report(const Report& report, ReportFormat format);
/// Writes serialize_report to `path`; IoError names the path on failure.
void emit_report(const Report& report, const std::string& path, ReportFormat format);

/// Shortest round-trip decimal form.
std::string format_double(double v);
/// FNV-1a of a string, as 16 hex digits.
std::string digest(const std::string& text);

enum ExitCode : int { kPass = 0, kToleranceFailure = 1, kConfigError = 2, kRuntimeError = 3 };

}  // namespace momentlab::harness

#endif  // MOMENTLAB_HARNESS_HPP
