#pragma once

// Named experiments over the library and their JSON/CSV result documents.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfd/hilbert.hpp"

namespace tfd {

enum class EngineChoice { Abstract, Numeric, Both };

struct ExperimentConfig {
  std::string experiment;
  double beta = 1.0;
  std::optional<double> beta2;
  double omega = 1.0;
  int cutoff = 24;
  Complex a0{0.6, 0.0};
  Complex a1{0.8, 0.0};
  double mu = 0.5;
  EngineChoice engine = EngineChoice::Both;
  std::uint64_t seed = 42;
  /// Teleport only: "thermo" (β_A = β_B = β_C = beta, or β_B = β_C = beta2
  /// when given) or a zero-temperature variant "00", "11", "01", "10".
  std::string variant = "thermo";
  /// One numeric field swept over several values: "beta=0.5,1,2".
  std::optional<std::string> grid;
  bool timing = false;
};

const std::vector<std::string>& experiment_names();

/// Fields (flag names without dashes) that influence an experiment.
const std::vector<std::string>& relevant_fields(const std::string& experiment);

/// Throws ConfigError on any invalid field.
void validate(const ExperimentConfig& cfg);

struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ResultDocument {
  std::string experiment;
  nlohmann::ordered_json config;
  std::vector<Check> checks;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();
  std::optional<double> wall_time_seconds;

  bool all_pass() const;
  /// First failing check, if any.
  const Check* first_failure() const;
};

/// Runs one experiment (or its grid sweep, in grid order). Deterministic for
/// a fixed config; wall time is only recorded when cfg.timing is set.
ResultDocument run_experiment(const ExperimentConfig& cfg);

/// Rounds to 12 significant digits.
double round12(double x);

nlohmann::ordered_json to_json(const ResultDocument& doc);
std::string to_csv(const ResultDocument& doc);

enum class OutputFormat { Json, Csv };

/// Writes the document; throws std::runtime_error if the path is unwritable.
void emit_results(const ResultDocument& doc, OutputFormat format, const std::string& path);

/// Parses the checks back out of a JSON document written by emit_results.
std::vector<Check> read_checks(const std::string& json_text);

/// Parses "inf"/"infinity" as zero temperature; otherwise a positive real.
double parse_beta(const std::string& text);

}  // namespace tfd
