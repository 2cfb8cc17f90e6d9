#include "tfd/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tfd/abstract_ket.hpp"
#include "tfd/diagnostics.hpp"
#include "tfd/errors.hpp"
#include "tfd/gates.hpp"
#include "tfd/nogo_maps.hpp"
#include "tfd/spin_gibbs.hpp"
#include "tfd/teleport.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

using json = nlohmann::ordered_json;

namespace {

constexpr int kMaxDensityCutoff = 400;

json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round12(x);
}

std::string format12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string engine_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::Abstract: return "abstract";
    case EngineChoice::Numeric: return "numeric";
    case EngineChoice::Both: return "both";
  }
  return "?";
}

// Collects checks and diagnostics for one run; grid runs add a name suffix.
struct Sink {
  std::vector<Check>& checks;
  json& diag;
  std::string suffix;

  void check(const std::string& name, double value, double expected, double tolerance) {
    const bool ok = std::isfinite(value) && std::abs(value - expected) <= tolerance;
    checks.push_back({name + suffix, value, expected, tolerance, ok});
  }
  void check_bool(const std::string& name, bool value, bool expected) {
    checks.push_back({name + suffix, value ? 1.0 : 0.0, expected ? 1.0 : 0.0, 0.0, value == expected});
  }
};

ThermalParams first_params(const ExperimentConfig& cfg) {
  return bogoliubov_params(cfg.beta, cfg.omega);
}

ThermalParams second_params(const ExperimentConfig& cfg) {
  return bogoliubov_params(cfg.beta2.value_or(kZeroTemperature), cfg.omega);
}

// Cutoff for checks against closed forms on single-mode densities, which stay
// cheap at large dimension.
int density_cutoff(const ExperimentConfig& cfg, std::initializer_list<ThermalParams> params) {
  int n = cfg.cutoff;
  for (const auto& p : params) n = std::max(n, cutoff_for_tail(p, 1e-16, kMaxDensityCutoff));
  return n;
}

double max_abs_entry(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

void run_expectation_equivalence(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p = first_params(cfg);
  const int n = cfg.cutoff;
  const auto vac = thermal_vacuum(p, n);
  const ComplexMatrix rho = thermal_density(p, n);
  const auto ops = FockOperators::make(n);
  const double tol = std::max(1e-9, 10.0 * vac.tail_mass);

  const std::vector<std::pair<std::string, ComplexMatrix>> observables = {
      {"n", ops.number},
      {"n^2", ops.number * ops.number},
      {"c+c^dag", ops.annihilate + ops.create}};
  for (const auto& [name, op] : observables) {
    out.check("vacuum vs trace <" + name + ">", expectation_system(vac.state, op).real(),
              (rho * op).trace().real(), tol);
  }
  out.check("bose-einstein <n>", expectation_system(vac.state, ops.number).real(), p.nbar, tol);

  const ThermofieldQubit q(cfg.a0, cfg.a1, p, n);
  const ComplexMatrix rpsi = rho_psi(q);
  const StateVector psi = qubit_state(q);
  for (const auto& [name, op] : observables) {
    out.check("generalized expectation <" + name + ">", (rpsi * op).trace().real(),
              expectation_system(psi, op).real(), 1e-8);
  }
  out.diag["tail_mass"] = num(vac.tail_mass);
  out.diag["truncation_warning"] = vac.truncation_warning;
  out.diag["nbar"] = num(p.nbar);
  out.diag["rho_psi_trace"] = num(rpsi.trace().real());
}

void run_teleport_experiment(const ExperimentConfig& cfg, Sink& out) {
  SourceSpec source;
  ChannelSpec channel;
  if (cfg.variant == "thermo") {
    const double bob_beta = cfg.beta2.value_or(cfg.beta);
    source = SourceSpec::thermofield(cfg.beta);
    channel = ChannelSpec::thermofield(bob_beta, bob_beta);
  } else {
    const ZeroTempVariant xy = parse_zero_temp_variant(cfg.variant);
    source = SourceSpec::zero_temperature(xy);
    channel = ChannelSpec::zero_temperature(xy, cfg.beta);
  }

  std::vector<Engine> engines;
  if (cfg.engine != EngineChoice::Numeric) engines.push_back(Engine::Abstract);
  if (cfg.engine != EngineChoice::Abstract) engines.push_back(Engine::Numeric);

  json branches = json::array();
  for (const Engine e : engines) {
    TeleportOptions opts;
    opts.engine = e;
    opts.omega = cfg.omega;
    opts.cutoff = cfg.cutoff;
    const auto outcomes = run_teleport(cfg.a0, cfg.a1, source, channel, opts);
    const std::string ename = e == Engine::Abstract ? "abstract" : "numeric";
    double prob_sum = 0.0;
    for (const auto& o : outcomes) {
      const double tol = e == Engine::Abstract ? 1e-12 : std::max(1e-12, 10.0 * o.tail_mass);
      const bool prob_ok = std::abs(o.probability - 0.25) <= 1e-12;
      out.check(ename + " " + to_string(o.branch) + " fidelity", o.fidelity, 1.0, tol);
      if (!prob_ok) out.checks.back().pass = false;
      prob_sum += o.probability;
      json b;
      b["engine"] = ename;
      b["branch"] = to_string(o.branch);
      b["message_bits"] = o.message.bits();
      b["probability"] = num(o.probability);
      b["fidelity"] = num(o.fidelity);
      if (o.source_temperature_fidelity) {
        b["source_temperature_fidelity"] = num(*o.source_temperature_fidelity);
      }
      if (e == Engine::Numeric) {
        b["cutoff"] = opts.cutoff;
        b["tail_mass"] = num(o.tail_mass);
      }
      branches.push_back(std::move(b));
    }
    out.diag[ename + "_probability_sum"] = num(prob_sum);
  }
  out.diag["branches"] = std::move(branches);
}

void run_mandel(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p = first_params(cfg);
  const int nw = density_cutoff(cfg, {p});
  const double tail = thermal_tail_mass(p, nw);
  const MandelReport thermal = mandel_q(thermal_density(p, nw));
  out.check("thermal Q = nbar", thermal.q, p.nbar,
            std::max(1e-9, 10.0 * static_cast<double>(nw) * nw * tail));

  const MandelReport fock1 = mandel_q(basis_ket(cfg.cutoff + 1, 1));
  out.check("fock |1> Q", fock1.q, -1.0, 0.0);

  // Poisson weights with mean 2; the tail beyond n = 60 is below 1e-40.
  StateVector coherent(61);
  double w = std::exp(-1.0);  // sqrt(e^{-2})
  for (Index k = 0; k < coherent.size(); ++k) {
    coherent(k) = w;
    w *= std::sqrt(2.0) / std::sqrt(static_cast<double>(k + 1));
  }
  coherent.normalize();
  out.check("poisson Q", mandel_q(coherent).q, 0.0, 1e-8);

  const int n = cfg.cutoff;
  const GateOp g = GateOp::random(n + 1, cfg.seed);
  const auto gv = mandel_q_gated_vacuum(g, p, n);
  out.check("gated vacuum Q state vs density", gv.from_state.q, gv.from_density.q, 1e-10);

  const MandelReport thermal_n = mandel_q(thermal_density(p, n));
  const auto phase = mandel_q_gated_vacuum(GateOp::phase(n + 1, 0.7), p, n);
  out.check("phase gate preserves Q", phase.from_state.q, thermal_n.q, 1e-12);

  const ThermofieldQubit q(cfg.a0, cfg.a1, p, n);
  const auto gq = mandel_q_gated_qubit(g, q);
  out.check("gated qubit Q state vs density", gq.from_state.q, gq.from_density.q, 1e-8);

  out.diag["working_cutoff"] = nw;
  out.diag["thermal_Q"] = num(thermal.q);
  out.diag["thermal_regime"] = to_string(thermal.regime);
  out.diag["gated_vacuum_Q"] = num(gv.from_state.q);
  out.diag["gated_qubit_Q"] = num(gq.from_state.q);
  out.diag["gated_qubit_regime"] = to_string(gq.from_state.regime);
  out.diag["gate"] = g.name();
}

void run_gibbs_hadamard(const ExperimentConfig& cfg, Sink& out) {
  const double x = cfg.beta * cfg.omega;
  const SpinGibbs s = spin_gibbs(x);
  const ComplexMatrix h = hadamard_transform(s);
  out.check("hadamard diagonal 00", h(0, 0).real(), 0.5, 1e-14);
  out.check("hadamard diagonal 11", h(1, 1).real(), 0.5, 1e-14);
  out.check("hadamard |off-diagonal|", std::abs(h(0, 1)), 0.5 * std::tanh(0.5 * x), 1e-12);
  out.check("double hadamard residual", verify_gibbs_reversibility(s), 0.0, 1e-14);
  const ComplexMatrix printed = hadamard_printed_form(s);
  out.check("printed form |off-diagonal|", std::abs(printed(0, 1)), std::abs(h(0, 1)), 1e-14);
  out.diag["partition"] = num(s.partition);
  out.diag["off_diagonal_conjugation"] = num(h(0, 1).real());
  out.diag["off_diagonal_printed"] = num(printed(0, 1).real());
}

void run_no_clone(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p = first_params(cfg);
  const int n = cfg.cutoff;
  const StateVector e0 = thermal_vacuum(p, n).state;
  const StateVector e1 = excited_thermofield(p, n);

  const double cross = (std::norm(cfg.a0) * cfg.a0 + std::norm(cfg.a1) * cfg.a1).real();
  const double expected = std::sqrt(std::max(0.0, 2.0 - 2.0 * cross));
  // The clone lives on a four-mode space, beyond the default dimension cap.
  const Index clone_dim = e0.size() * e0.size();
  out.check("cloning linearity gap", cloning_linearity_gap(cfg.a0, cfg.a1, e0, e1, clone_dim),
            expected, 1e-12);
  out.check("basis state gap", cloning_linearity_gap(1.0, 0.0, e0, e1, clone_dim), 0.0, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  out.check("equal superposition gap", cloning_linearity_gap(r, r, e0, e1, clone_dim),
            std::sqrt(2.0 - std::sqrt(2.0)), 1e-12);

  bool rejected = false;
  try {
    doubling_map(StateVector((basis_ket(n + 1, 0) + basis_ket(n + 1, 1)) * r));
  } catch (const UnsupportedInputError&) {
    rejected = true;
  }
  out.check_bool("doubling map rejects superposition", rejected, true);
}

void run_broadcast(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p = first_params(cfg);
  const int n = cfg.cutoff;
  const ComplexMatrix rho = thermal_density(p, n);
  const ComplexMatrix vac = projector(basis_ket(n + 1, 0));
  const double mu = cfg.mu;

  const auto swap = broadcast_check(swap_mixture_state(rho, mu), rho);
  out.check("swap mixture Tr_A formula", max_abs_entry(swap.traced_a - (mu * vac + (1 - mu) * rho)),
            0.0, 1e-12);
  out.check("swap mixture Tr_B formula", max_abs_entry(swap.traced_b - (mu * rho + (1 - mu) * vac)),
            0.0, 1e-12);
  const bool pure = p.nbar == 0.0;
  out.check_bool("swap mixture broadcasts rho", swap.is_broadcast, pure);

  const ComplexMatrix mixed = mu * rho + (1 - mu) * vac;
  const auto prod = broadcast_check(product_mixture_state(rho, mu), mixed);
  out.check("product mixture Tr_A", max_abs_entry(prod.traced_a - mixed), 0.0, 1e-12);
  out.check("product mixture Tr_B", max_abs_entry(prod.traced_b - mixed), 0.0, 1e-12);
  out.check_bool("product mixture broadcasts the mixture", prod.is_broadcast, true);

  out.check_bool("rho x rho broadcasts rho", broadcast_check(tensor_product(rho, rho), rho).is_broadcast,
                 true);

  const ThermalParams p2 = second_params(cfg);
  const auto tb = thermal_broadcast_maps(rho, p, p2);
  out.check("thermal map Tr_A deviation", tb.against_first.deviation_a, 0.0, 1e-10);
  out.check("thermal map Tr_B deviation", tb.against_second.deviation_b, 0.0, 1e-10);

  out.diag["swap_deviation_a"] = num(swap.deviation_a);
  out.diag["swap_deviation_b"] = num(swap.deviation_b);
}

void run_overlap(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p1 = first_params(cfg);
  const ThermalParams p2 = second_params(cfg);
  const Complex overlap = vacuum_overlap(p1, p2);
  out.check("vacuum overlap", overlap.real(), analytic_vacuum_overlap(p1, p2), 1e-9);

  const int n = density_cutoff(cfg, {p1, p2});
  const auto ops = FockOperators::make(n);
  const auto sup = superposed_vacuum_expectation(cfg.mu, p1, p2, ops.number);
  out.check("superposed vacuum abstract <n>", sup.abstract_value.real(),
            cfg.mu * p1.nbar + (1.0 - cfg.mu) * p2.nbar, 1e-10);
  out.diag["overlap_imag"] = num(overlap.imag());
  out.diag["working_cutoff"] = n;
  out.diag["superposed_numeric_n"] = num(sup.numeric_value.real());
  out.diag["superposed_cross_term"] = num((sup.numeric_value - sup.abstract_value).real());
  out.diag["superposed_norm_squared"] = num(sup.norm_squared);
}

void run_mixture(const ExperimentConfig& cfg, Sink& out) {
  const ThermalParams p1 = first_params(cfg);
  const ThermalParams p2 = second_params(cfg);
  const int n = density_cutoff(cfg, {p1, p2});
  const TemperatureMixture mix({{p1.beta, cfg.mu}, {p2.beta, 1.0 - cfg.mu}});
  const ComplexMatrix rho = mixture_density(mix, cfg.omega, n);
  const auto ops = FockOperators::make(n);
  out.check("mixture trace", rho.trace().real(), 1.0, 1e-12);
  out.check("mixture <n>", (rho * ops.number).trace().real(),
            cfg.mu * p1.nbar + (1.0 - cfg.mu) * p2.nbar, 1e-10);
  const ComplexMatrix delta = mixture_density(TemperatureMixture({{p1.beta, 1.0}}), cfg.omega, n);
  out.check("delta weight reproduces thermal density",
            max_abs_entry(delta - thermal_density(p1, n)), 0.0, 1e-15);
  out.diag["working_cutoff"] = n;
}

using Runner = std::function<void(const ExperimentConfig&, Sink&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"expectation-equivalence", run_expectation_equivalence},
      {"teleport", run_teleport_experiment},
      {"mandel", run_mandel},
      {"gibbs-hadamard", run_gibbs_hadamard},
      {"no-clone", run_no_clone},
      {"broadcast", run_broadcast},
      {"overlap", run_overlap},
      {"mixture", run_mixture},
  };
  return table;
}

struct GridSpec {
  std::string field;
  std::vector<std::string> tokens;
  std::vector<double> values;
};

GridSpec parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= text.size()) {
    throw ConfigError("--grid expects name=v1,v2,...");
  }
  GridSpec g;
  g.field = text.substr(0, eq);
  static const std::vector<std::string> allowed = {"beta", "beta2", "nbar", "nbar2",
                                                   "mu", "cutoff", "omega", "seed"};
  if (std::find(allowed.begin(), allowed.end(), g.field) == allowed.end()) {
    throw ConfigError("--grid: unsupported field '" + g.field + "'");
  }
  std::stringstream ss(text.substr(eq + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ConfigError("--grid: empty value");
    double v = 0.0;
    if (g.field == "beta" || g.field == "beta2") {
      v = parse_beta(tok);
    } else {
      char* end = nullptr;
      v = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0') throw ConfigError("--grid: bad number '" + tok + "'");
    }
    g.tokens.push_back(tok);
    g.values.push_back(v);
  }
  return g;
}

ExperimentConfig apply_grid_value(ExperimentConfig cfg, const std::string& field, double v) {
  cfg.grid.reset();
  if (field == "beta") cfg.beta = v;
  else if (field == "beta2") cfg.beta2 = v;
  else if (field == "nbar") cfg.beta = params_from_nbar(v, cfg.omega).beta;
  else if (field == "nbar2") cfg.beta2 = params_from_nbar(v, cfg.omega).beta;
  else if (field == "mu") cfg.mu = v;
  else if (field == "cutoff") cfg.cutoff = static_cast<int>(v);
  else if (field == "omega") cfg.omega = v;
  else if (field == "seed") cfg.seed = static_cast<std::uint64_t>(v);
  return cfg;
}

json config_json(const ExperimentConfig& cfg) {
  json c;
  c["experiment"] = cfg.experiment;
  c["beta"] = num(cfg.beta);
  c["beta2"] = cfg.beta2 ? num(*cfg.beta2) : json(nullptr);
  c["omega"] = num(cfg.omega);
  c["cutoff"] = cfg.cutoff;
  c["a0_re"] = num(cfg.a0.real());
  c["a0_im"] = num(cfg.a0.imag());
  c["a1_re"] = num(cfg.a1.real());
  c["a1_im"] = num(cfg.a1.imag());
  c["mu"] = num(cfg.mu);
  c["engine"] = engine_name(cfg.engine);
  c["seed"] = cfg.seed;
  c["variant"] = cfg.variant;
  c["grid"] = cfg.grid ? json(*cfg.grid) : json(nullptr);
  return c;
}

void validate_single(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (std::isnan(cfg.beta) || cfg.beta <= 0.0) fail("beta must be positive or inf");
  if (cfg.beta2 && (std::isnan(*cfg.beta2) || *cfg.beta2 <= 0.0)) {
    fail("beta2 must be positive or inf");
  }
  if (!(cfg.omega > 0.0) || !std::isfinite(cfg.omega)) fail("omega must be positive and finite");
  if (cfg.cutoff < 2) fail("cutoff must be >= 2");
  if (static_cast<Index>(cfg.cutoff + 1) * (cfg.cutoff + 1) > kDefaultMaxDim) {
    fail("cutoff too large: (cutoff+1)^2 must not exceed " + std::to_string(kDefaultMaxDim));
  }
  if (std::isnan(cfg.mu) || cfg.mu < 0.0 || cfg.mu > 1.0) fail("mu must lie in [0, 1]");
  if (std::abs(std::norm(cfg.a0) + std::norm(cfg.a1) - 1.0) > 1e-10) {
    fail("amplitudes must satisfy |a0|^2 + |a1|^2 = 1");
  }
  if (cfg.experiment == "teleport" && cfg.variant != "thermo") {
    parse_zero_temp_variant(cfg.variant);
  }
  if ((cfg.experiment == "mandel" || cfg.experiment == "gibbs-hadamard") &&
      cfg.beta == kZeroTemperature) {
    fail(cfg.experiment + " requires a finite beta");
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"expectation-equivalence", "teleport", "mandel",
                                                 "gibbs-hadamard", "no-clone", "broadcast",
                                                 "overlap", "mixture"};
  return names;
}

const std::vector<std::string>& relevant_fields(const std::string& experiment) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"expectation-equivalence", {"beta", "nbar", "omega", "cutoff", "a0", "a1"}},
      {"teleport", {"beta", "nbar", "beta2", "nbar2", "omega", "cutoff", "a0", "a1", "engine", "variant"}},
      {"mandel", {"beta", "nbar", "omega", "cutoff", "a0", "a1", "seed"}},
      {"gibbs-hadamard", {"beta", "nbar", "omega"}},
      {"no-clone", {"beta", "nbar", "omega", "cutoff", "a0", "a1"}},
      {"broadcast", {"beta", "nbar", "beta2", "nbar2", "omega", "cutoff", "mu"}},
      {"overlap", {"beta", "nbar", "beta2", "nbar2", "omega", "cutoff", "mu"}},
      {"mixture", {"beta", "nbar", "beta2", "nbar2", "omega", "cutoff", "mu"}},
  };
  static const std::vector<std::string> none;
  auto it = table.find(experiment);
  return it == table.end() ? none : it->second;
}

void validate(const ExperimentConfig& cfg) {
  if (runners().count(cfg.experiment) == 0) {
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  }
  if (!cfg.grid) {
    validate_single(cfg);
    return;
  }
  const GridSpec g = parse_grid(*cfg.grid);
  for (const double v : g.values) validate_single(apply_grid_value(cfg, g.field, v));
}

bool ResultDocument::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* ResultDocument::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

ResultDocument run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ResultDocument doc;
  doc.experiment = cfg.experiment;
  doc.config = config_json(cfg);
  const Runner& run = runners().at(cfg.experiment);

  if (!cfg.grid) {
    Sink sink{doc.checks, doc.diagnostics, ""};
    run(cfg, sink);
  } else {
    const GridSpec g = parse_grid(*cfg.grid);
    json runs = json::array();
    for (std::size_t k = 0; k < g.values.size(); ++k) {
      json diag = json::object();
      Sink sink{doc.checks, diag, " [" + g.field + "=" + g.tokens[k] + "]"};
      run(apply_grid_value(cfg, g.field, g.values[k]), sink);
      json entry;
      entry[g.field] = g.tokens[k];
      entry["diagnostics"] = std::move(diag);
      runs.push_back(std::move(entry));
    }
    doc.diagnostics["runs"] = std::move(runs);
  }

  if (cfg.timing) {
    doc.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return doc;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const ResultDocument& doc) {
  json j;
  j["experiment"] = doc.experiment;
  j["config"] = doc.config;
  json checks = json::array();
  for (const auto& c : doc.checks) {
    json e;
    e["name"] = c.name;
    e["value"] = num(c.value);
    e["expected"] = num(c.expected);
    e["tolerance"] = num(c.tolerance);
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["diagnostics"] = doc.diagnostics;
  json summary;
  const auto passed = std::count_if(doc.checks.begin(), doc.checks.end(),
                                    [](const Check& c) { return c.pass; });
  summary["total"] = doc.checks.size();
  summary["passed"] = passed;
  summary["failed"] = static_cast<long>(doc.checks.size()) - passed;
  summary["all_pass"] = doc.all_pass();
  const Check* f = doc.first_failure();
  summary["first_failure"] = f ? json(f->name) : json(nullptr);
  j["summary"] = std::move(summary);
  if (doc.wall_time_seconds) j["wall_time_seconds"] = num(*doc.wall_time_seconds);
  return j;
}

std::string to_csv(const ResultDocument& doc) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "name,value,expected,tolerance,pass\n";
  for (const auto& c : doc.checks) {
    os << quote(c.name) << ',' << format12(c.value) << ',' << format12(c.expected) << ','
       << format12(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

void emit_results(const ResultDocument& doc, OutputFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  if (format == OutputFormat::Json) {
    f << to_json(doc).dump(2) << '\n';
  } else {
    f << to_csv(doc);
  }
  if (!f) throw std::runtime_error("failed writing output file '" + path + "'");
}

std::vector<Check> read_checks(const std::string& json_text) {
  const json j = json::parse(json_text);
  std::vector<Check> out;
  auto as_double = [](const json& v) {
    if (v.is_number()) return v.get<double>();
    return std::strtod(v.get<std::string>().c_str(), nullptr);
  };
  for (const auto& e : j.at("checks")) {
    out.push_back({e.at("name").get<std::string>(), as_double(e.at("value")),
                   as_double(e.at("expected")), as_double(e.at("tolerance")),
                   e.at("pass").get<bool>()});
  }
  return out;
}

double parse_beta(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity" || t == "+inf") return kZeroTemperature;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("beta must be a positive number or 'inf', got '" + text + "'");
  }
  return v;
}

}  // namespace tfd
