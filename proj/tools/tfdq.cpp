// tfdq: runs a named experiment and writes its result table as JSON or CSV.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tfd/errors.hpp"
#include "tfd/experiments.hpp"
#include "tfd/thermo.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermofield-dynamics qubit experiments"};
  app.set_version_flag("--version", "tfdq 1.0");

  tfd::ExperimentConfig cfg;
  std::string beta_text, beta2_text;
  double nbar = 0.0, nbar2 = 0.0;
  double a0_re = 0.6, a0_im = 0.0, a1_re = 0.8, a1_im = 0.0;
  std::string engine = "both";
  std::string format = "json";
  std::string output;
  std::string grid;

  app.add_option("experiment", cfg.experiment, "Experiment: " + join(tfd::experiment_names()))
      ->required();
  app.add_option("--beta", beta_text, "Inverse temperature (positive, or 'inf')");
  app.add_option("--nbar", nbar, "Mean occupation; sets beta through Bose-Einstein")
      ->excludes("--beta");
  app.add_option("--beta2", beta2_text, "Second inverse temperature (default inf)");
  app.add_option("--nbar2", nbar2, "Mean occupation for the second temperature")
      ->excludes("--beta2");
  app.add_option("--omega", cfg.omega, "Mode frequency")->capture_default_str();
  app.add_option("--cutoff,-N", cfg.cutoff, "Fock cutoff N")->capture_default_str();
  app.add_option("--a0", a0_re, "Re a0")->capture_default_str();
  app.add_option("--a0-im", a0_im, "Im a0")->capture_default_str();
  app.add_option("--a1", a1_re, "Re a1")->capture_default_str();
  app.add_option("--a1-im", a1_im, "Im a1")->capture_default_str();
  app.add_option("--mu", cfg.mu, "Mixture weight in [0, 1]")->capture_default_str();
  app.add_option("--engine", engine, "abstract | numeric | both")
      ->check(CLI::IsMember({"abstract", "numeric", "both"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random gates")->capture_default_str();
  app.add_option("--variant", cfg.variant, "Teleport channel: thermo, 00, 11, 01, 10")
      ->capture_default_str();
  app.add_option("--grid", grid, "Sweep one field: name=v1,v2,...");
  app.add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", output,
                 "Output file (default: $TFDQ_OUTPUT_DIR/<experiment>.<format>, else stdout)");
  app.add_flag("--timing", cfg.timing, "Record wall time in the result document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  tfd::ResultDocument doc;
  try {
    if (!beta_text.empty()) cfg.beta = tfd::parse_beta(beta_text);
    if (!beta2_text.empty()) cfg.beta2 = tfd::parse_beta(beta2_text);
    if (app.count("--nbar")) {
      if (!(nbar >= 0.0)) throw tfd::ConfigError("nbar must be non-negative");
      cfg.beta = tfd::params_from_nbar(nbar, cfg.omega).beta;
    }
    if (app.count("--nbar2")) {
      if (!(nbar2 >= 0.0)) throw tfd::ConfigError("nbar2 must be non-negative");
      cfg.beta2 = tfd::params_from_nbar(nbar2, cfg.omega).beta;
    }
    cfg.a0 = {a0_re, a0_im};
    cfg.a1 = {a1_re, a1_im};
    cfg.engine = engine == "abstract"  ? tfd::EngineChoice::Abstract
                 : engine == "numeric" ? tfd::EngineChoice::Numeric
                                       : tfd::EngineChoice::Both;
    if (!grid.empty()) cfg.grid = grid;

    tfd::validate(cfg);

    const auto& relevant = tfd::relevant_fields(cfg.experiment);
    for (const char* flag : {"beta", "nbar", "beta2", "nbar2", "omega", "cutoff", "a0", "a0-im",
                             "a1", "a1-im", "mu", "engine", "seed", "variant"}) {
      if (app.count(std::string("--") + flag) == 0) continue;
      std::string base(flag);
      if (base.size() > 3 && base.substr(base.size() - 3) == "-im") base.resize(base.size() - 3);
      if (std::find(relevant.begin(), relevant.end(), base) == relevant.end()) {
        std::cerr << "warning: --" << flag << " is ignored by experiment '" << cfg.experiment
                  << "'\n";
      }
    }

    doc = tfd::run_experiment(cfg);
  } catch (const tfd::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }

  const auto fmt = format == "csv" ? tfd::OutputFormat::Csv : tfd::OutputFormat::Json;
  std::string path = output;
  if (path.empty()) {
    if (const char* dir = std::getenv("TFDQ_OUTPUT_DIR"); dir && *dir) {
      path = (std::filesystem::path(dir) / (cfg.experiment + "." + format)).string();
    }
  }
  try {
    if (path.empty()) {
      if (fmt == tfd::OutputFormat::Json) {
        std::cout << tfd::to_json(doc).dump(2) << '\n';
      } else {
        std::cout << tfd::to_csv(doc);
      }
    } else {
      tfd::emit_results(doc, fmt, path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!cfg.timing) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "wall time: " << secs << " s\n";
  }
  if (const tfd::Check* f = doc.first_failure()) {
    std::cerr << "FAILED: " << f->name << " (value " << f->value << ", expected " << f->expected
              << ", tolerance " << f->tolerance << ")\n";
    return kExitCheckFailure;
  }
  return 0;
}
