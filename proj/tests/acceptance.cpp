// Acceptance suite: one PASS/FAIL line per criterion. With a criterion number
// as argument only that criterion runs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfd/diagnostics.hpp"
#include "tfd/errors.hpp"
#include "tfd/gates.hpp"
#include "tfd/nogo_maps.hpp"
#include "tfd/spin_gibbs.hpp"
#include "tfd/teleport.hpp"
#include "tfd/thermo.hpp"

using namespace tfd;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Running record of the worst |value − expected| / tolerance seen.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  void close(double value, double expected, double tol, const std::string& what) {
    const double dev = std::abs(value - expected);
    worst_ratio_ = std::max(worst_ratio_, tol > 0 ? dev / tol : (dev > 0 ? INFINITY : 0.0));
    worst_dev_ = std::max(worst_dev_, dev);
    check(std::isfinite(value) && dev <= tol, what + " (deviation " + fmt(dev) + ", tolerance " +
                                                   fmt(tol) + ")");
  }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream os;
    os << (count_ - failed_) << "/" << count_ << " checks";
    if (worst_dev_ > 0 || worst_ratio_ > 0) {
      os << ", worst deviation " << fmt(worst_dev_) << ", worst deviation/tolerance "
         << fmt(worst_ratio_);
    }
    if (!extra.empty()) os << ", " << extra;
    if (failed_ > 0) os << "; first failure: " << first_failure_;
    return {failed_ == 0, os.str()};
  }
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  double worst_ratio_ = 0.0;
  double worst_dev_ = 0.0;
  std::string first_failure_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> nbar_grid() {
  std::vector<double> out;
  for (int k = 0; k < 10; ++k) out.push_back(0.05 + (3.0 - 0.05) * k / 9.0);
  return out;
}

std::string label(const std::string& what, double x) { return what + "=" + Tally::fmt(x); }

Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  const int n = 24;
  const auto ops = FockOperators::make(n);
  const std::vector<std::pair<std::string, ComplexMatrix>> observables = {
      {"n", ops.number}, {"n^2", ops.number * ops.number}, {"c+c^dag", ops.annihilate + ops.create}};
  for (double nbar : nbar_grid()) {
    const auto p = bogoliubov_params(oracle::beta_for_nbar(nbar));
    const auto vac = thermal_vacuum(p, n);
    const ComplexMatrix rho = thermal_density(p, n);
    const double tol = std::max(1e-9, 10.0 * vac.tail_mass);
    for (const auto& [name, o] : observables) {
      t.close(expectation_system(vac.state, o).real(), (rho * o).trace().real(), tol,
              label("nbar", nbar) + " <" + name + ">");
    }
  }
  const double secs = seconds_since(t0);
  t.check(secs < 1.0, "runtime " + Tally::fmt(secs) + " s");
  return t.outcome("runtime " + Tally::fmt(secs) + " s");
}

Outcome criterion_2() {
  Tally t;
  const int n = 24;
  const auto ops = FockOperators::make(n);
  for (double nbar : nbar_grid()) {
    const double beta = oracle::beta_for_nbar(nbar);
    const auto p = bogoliubov_params(beta);
    const auto vac = thermal_vacuum(p, n);
    const double tol = std::max(1e-9, 10.0 * vac.tail_mass);
    const double measured = expectation_system(vac.state, ops.number).real();
    t.close(measured, oracle::bose_einstein(beta), tol, label("nbar", nbar));
    t.close(measured, std::sinh(p.theta) * std::sinh(p.theta), tol, label("nbar", nbar) + " sinh^2");
  }
  return t.outcome();
}

Outcome criterion_3() {
  Tally t;
  const int n = 24;
  const auto ops = FockOperators::make(n);
  const std::vector<ComplexMatrix> observables = {ops.number, ops.number * ops.number,
                                                  ops.annihilate + ops.create};
  for (double beta : {0.5, 1.0, 2.0, 3.0, 5.0}) {
    const auto p = bogoliubov_params(beta);
    for (const auto& [a0, a1] : oracle::random_amplitudes(20, 2024)) {
      const ThermofieldQubit q(a0, a1, p, n);
      const ComplexMatrix r = rho_psi(q);
      const StateVector psi = qubit_state(q);
      for (const auto& o : observables) {
        const Complex lhs = (r * o).trace();
        const Complex rhs = expectation_system(psi, o);
        t.close(std::abs(lhs - rhs), 0.0, 1e-8, label("beta", beta));
      }
    }
  }
  return t.outcome();
}

Outcome criterion_4() {
  Tally t;
  const int n = 12;
  const auto amplitudes = oracle::random_amplitudes(10, 77);
  for (double beta : {1.0, 1.2, 2.0 * std::log(2.0), 1.7, 2.0}) {
    const auto p = bogoliubov_params(beta);
    const double tail = thermal_tail_mass(p, n);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GateOp g = GateOp::random(n + 1, 1000 + seed);
      const std::string where = label("beta", beta) + " gate " + g.name();
      try {
        const StateVector e1 = gate_excited(g, p, n);
        const StateVector ref = apply_system(g.unitary(), excited_thermofield(p, n));
        t.close((e1 - ref).norm(), 0.0, 1e-8, where + " |1_G>");
      } catch (const ConsistencyError& e) {
        t.check(false, where + ": " + e.what());
      }
      const auto& [a0, a1] = amplitudes[seed - 1];
      const ThermofieldQubit q(a0, a1, p, n);
      const ComplexMatrix expected = g.unitary() * rho_psi(q) * g.unitary().adjoint();
      t.close(oracle::max_abs(rho_psi_gated(g, q) - expected), 0.0, 1e-10, where + " rho_psi_G");
      const auto res = check_bogoliubov_commutator(g, p, n);
      t.close(res.residual, 0.0, 10.0 * tail, where + " commutator");
    }
  }
  return t.outcome();
}

Outcome criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::vector<std::pair<std::string, std::pair<SourceSpec, ChannelSpec>>> variants = {
      {"thermo", {SourceSpec::thermofield(1.0), ChannelSpec::thermofield(1.0, 1.0)}},
      {"cross-temperature", {SourceSpec::thermofield(0.5), ChannelSpec::thermofield(2.0, 3.0)}},
  };
  for (auto xy : {ZeroTempVariant::V00, ZeroTempVariant::V11, ZeroTempVariant::V01,
                  ZeroTempVariant::V10}) {
    variants.push_back({to_string(xy), {SourceSpec::zero_temperature(xy),
                                        ChannelSpec::zero_temperature(xy, 1.0)}});
  }
  const auto amplitudes = oracle::random_amplitudes(20, 31337);
  for (const auto& [name, sc] : variants) {
    for (const auto& [a0, a1] : amplitudes) {
      const auto out = run_teleport(a0, a1, sc.first, sc.second);
      double total = 0.0;
      for (const auto& o : out) {
        const std::string where = name + " " + to_string(o.branch);
        t.check(o.fidelity >= 1.0 - 1e-12, where + " fidelity " + Tally::fmt(o.fidelity));
        t.close(o.probability, 0.25, 1e-12, where + " probability");
        total += o.probability;
      }
      t.close(total, 1.0, 1e-12, name + " probability sum");
    }
  }
  TeleportOptions numeric;
  numeric.engine = Engine::Numeric;
  // Temperatures whose 10×tail at N = 24 stays above double rounding.
  for (double beta : {0.6, 0.8, 1.0}) {
    for (int k = 0; k < 5; ++k) {
      const auto& [a0, a1] = amplitudes[k];
      const auto out = run_teleport(a0, a1, SourceSpec::thermofield(beta),
                                    ChannelSpec::thermofield(beta, beta), numeric);
      for (const auto& o : out) {
        t.check(o.fidelity >= 1.0 - 10.0 * o.tail_mass,
                label("numeric beta", beta) + " " + to_string(o.branch));
      }
    }
  }
  const double secs = seconds_since(t0);
  t.check(secs < 5.0, "runtime " + Tally::fmt(secs) + " s");
  return t.outcome("runtime " + Tally::fmt(secs) + " s");
}

Outcome criterion_6() {
  Tally t;
  for (double nbar : nbar_grid()) {
    const auto p = bogoliubov_params(oracle::beta_for_nbar(nbar));
    const int n = cutoff_for_tail(p, 1e-16);
    t.close(mandel_q(thermal_density(p, n)).q, nbar, 1e-9, label("nbar", nbar));
  }
  const double fock = mandel_q(basis_ket(25, 1)).q;
  t.check(fock == -1.0, "Fock |1> gives " + Tally::fmt(fock));

  StateVector coherent(61);
  double log_fact = 0.0;
  for (int k = 0; k <= 60; ++k) {
    if (k > 0) log_fact += std::log(static_cast<double>(k));
    coherent(k) = std::exp(0.5 * (-2.0 + k * std::log(2.0) - log_fact));
  }
  coherent.normalize();
  const double poisson = mandel_q(coherent).q;
  t.check(std::abs(poisson) < 1e-8, "Poisson Q " + Tally::fmt(poisson));

  const auto amplitudes = oracle::random_amplitudes(10, 4242);
  for (double beta : {1.0, 2.0}) {
    const auto p = bogoliubov_params(beta);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GateOp g = GateOp::random(25, seed);
      const auto& [a0, a1] = amplitudes[seed - 1];
      try {
        const auto r = mandel_q_gated_qubit(g, ThermofieldQubit(a0, a1, p, 24));
        t.close(r.discrepancy, 0.0, 1e-8, label("gated qubit beta", beta));
      } catch (const std::exception& e) {
        t.check(false, label("gated qubit beta", beta) + ": " + e.what());
      }
    }
  }
  return t.outcome();
}

Outcome criterion_7() {
  Tally t;
  for (double x : {0.0, 1.0, 10.0}) {
    const SpinGibbs s = spin_gibbs(x);
    const ComplexMatrix h = hadamard_transform(s);
    t.close(h(0, 0).real(), 0.5, 1e-14, label("beta*omega", x) + " H00");
    t.close(h(1, 1).real(), 0.5, 1e-14, label("beta*omega", x) + " H11");
    t.close(std::abs(h(0, 1)), 0.5 * std::tanh(0.5 * x), 1e-12, label("beta*omega", x) + " |H01|");
    const double residual = verify_gibbs_reversibility(s);
    t.check(residual < 1e-14, label("beta*omega", x) + " double Hadamard " + Tally::fmt(residual));
  }
  return t.outcome();
}

Outcome criterion_8() {
  Tally t;
  const auto p = bogoliubov_params(2.0);
  const int n = 12;
  const StateVector e0 = thermal_vacuum(p, n).state;
  const StateVector e1 = excited_thermofield(p, n);
  const Index big = e0.size() * e0.size();
  const double r = 1.0 / std::sqrt(2.0);
  t.close(cloning_linearity_gap(r, r, e0, e1, big), std::sqrt(2.0 - std::sqrt(2.0)), 1e-12,
          "equal superposition");
  t.check(cloning_linearity_gap(1.0, 0.0, e0, e1, big) == 0.0, "basis |0(beta)>");
  t.check(cloning_linearity_gap(0.0, 1.0, e0, e1, big) == 0.0, "basis |1(beta)>");
  double smallest = INFINITY;
  for (int k = 1; k <= 50; ++k) {
    const double angle = 0.5 * std::numbers::pi * k / 51.0;
    const double gap = cloning_linearity_gap(std::cos(angle), std::sin(angle), e0, e1, big);
    smallest = std::min(smallest, gap);
    t.check(gap > 1e-3, label("grid angle", angle) + " gap " + Tally::fmt(gap));
  }
  return t.outcome("smallest grid gap " + Tally::fmt(smallest));
}

Outcome criterion_9() {
  Tally t;
  const int n = 12;
  const ComplexMatrix rho = thermal_density(bogoliubov_params(1.0), n);
  const ComplexMatrix vac = projector(basis_ket(n + 1, 0));
  for (double mu : {0.25, 0.5, 0.75}) {
    const auto swap = broadcast_check(swap_mixture_state(rho, mu), rho);
    t.close(oracle::max_abs(swap.traced_a - (mu * vac + (1 - mu) * rho)), 0.0, 1e-12,
            label("mu", mu) + " Tr_A");
    t.close(oracle::max_abs(swap.traced_b - (mu * rho + (1 - mu) * vac)), 0.0, 1e-12,
            label("mu", mu) + " Tr_B");
    t.check(!swap.is_broadcast, label("mu", mu) + " is_broadcast");
    const ComplexMatrix mixed = mu * rho + (1 - mu) * vac;
    const auto prod = broadcast_check(product_mixture_state(rho, mu), mixed);
    t.close(oracle::max_abs(prod.traced_a - mixed), 0.0, 1e-12, label("mu", mu) + " rho'' Tr_A");
    t.close(oracle::max_abs(prod.traced_b - mixed), 0.0, 1e-12, label("mu", mu) + " rho'' Tr_B");
  }
  return t.outcome();
}

Outcome criterion_10() {
  Tally t;
  const std::vector<std::pair<double, double>> pairs = {
      {1.0, 2.0}, {0.5, 3.0}, {2.0 * std::log(2.0), kZeroTemperature}, {0.3, 0.7}};
  for (const auto& [b1, b2] : pairs) {
    const auto p1 = bogoliubov_params(b1);
    const auto p2 = bogoliubov_params(b2);
    t.close(vacuum_overlap(p1, p2).real(), 1.0 / std::cosh(p1.theta - p2.theta), 1e-9,
            label("overlap beta", b1));
  }

  double largest_cross = 0.0;
  const auto p1 = bogoliubov_params(1.0);
  const auto p2 = bogoliubov_params(2.5);
  const int n = std::max(cutoff_for_tail(p1, 1e-16), cutoff_for_tail(p2, 1e-16));
  const auto ops = FockOperators::make(n);
  // Closed-form thermal moments: ⟨n⟩ = n̄, ⟨n²⟩ = 2n̄² + n̄, ⟨c + c†⟩ = 0.
  auto moment = [](int k, double nbar) {
    return k == 0 ? nbar : (k == 1 ? 2 * nbar * nbar + nbar : 0.0);
  };
  const std::vector<ComplexMatrix> observables = {ops.number, ops.number * ops.number,
                                                  ops.annihilate + ops.create};
  for (double mu : {0.25, 0.5, 0.75}) {
    const ComplexMatrix mix =
        mixture_density(TemperatureMixture({{p1.beta, mu}, {p2.beta, 1.0 - mu}}), 1.0, n);
    for (int k = 0; k < 3; ++k) {
      const double expected = mu * moment(k, p1.nbar) + (1 - mu) * moment(k, p2.nbar);
      t.close((mix * observables[k]).trace().real(), expected, 1e-10,
              label("mixture mu", mu) + " observable " + std::to_string(k));
      const auto sup = superposed_vacuum_expectation(mu, p1, p2, observables[k]);
      const double combination = mu * (thermal_density(p1, n) * observables[k]).trace().real() +
                                 (1 - mu) * (thermal_density(p2, n) * observables[k]).trace().real();
      t.check(sup.abstract_value.real() == combination,
              label("superposed mu", mu) + " abstract vs combination");
      t.close(sup.abstract_value.real(), expected, 1e-10, label("superposed mu", mu));
      largest_cross =
          std::max(largest_cross, std::abs((sup.numeric_value - sup.abstract_value).real()));
    }
  }
  return t.outcome("numeric cross-term up to " + Tally::fmt(largest_cross));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome criterion_11() {
  Tally t;
  const auto root = std::filesystem::temp_directory_path() / "tfdq_acceptance";
  std::filesystem::remove_all(root);
  const std::vector<std::string> configs = {
      "teleport --seed 7",
      "mandel --nbar 1.5 --seed 99",
      "broadcast --cutoff 10 --mu 0.3",
      "mixture --grid nbar=0.5,1,2 --format csv",
      "expectation-equivalence --a0 0.8 --a1 0 --a1-im 0.6",
      "no-clone --cutoff 12",
  };
  int idx = 0;
  for (const auto& args : configs) {
    std::vector<std::string> contents;
    for (int run = 0; run < 2; ++run) {
      const auto dir = root / ("run" + std::to_string(run));
      std::filesystem::create_directories(dir);
      const auto file = dir / ("out" + std::to_string(idx) + ".dat");
      const std::string cmd =
          std::string(TFDQ_PATH) + " " + args + " --output " + file.string() + " >/dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      t.check(rc == 0, args + " exit status " + std::to_string(rc));
      contents.push_back(slurp(file));
    }
    t.check(!contents[0].empty() && contents[0] == contents[1], args + " outputs differ");
    ++idx;
  }
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"expectation equivalence", criterion_1},
      {"Bose-Einstein occupation", criterion_2},
      {"generalized expectation", criterion_3},
      {"gate identities", criterion_4},
      {"teleportation", criterion_5},
      {"Mandel parameter", criterion_6},
      {"Gibbs/Hadamard", criterion_7},
      {"no-cloning", criterion_8},
      {"broadcasting", criterion_9},
      {"overlaps and mixtures", criterion_10},
      {"determinism", criterion_11},
  };
  std::size_t only = 0;
  if (argc > 1) only = std::strtoul(argv[1], nullptr, 10);
  if (argc > 1 && (only < 1 || only > criteria.size())) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
    return 2;
  }
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != k + 1) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2zu  %-26s %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
