#include "tfd/thermo.hpp"

#include <cmath>
#include <string>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
}

// Renormalized geometric weights q^n, q = tanh²θ, n = 0..cutoff.
Eigen::VectorXd thermal_weights(const ThermalParams& params, int cutoff) {
  const double q = params.tanh_theta() * params.tanh_theta();
  Eigen::VectorXd w(cutoff + 1);
  double term = 1.0;
  for (int n = 0; n <= cutoff; ++n) {
    w(n) = term;
    term *= q;
  }
  return w / w.sum();
}

Index doubled_side(const StateVector& psi, const ComplexMatrix& op) {
  const Index d = op.rows();
  if (op.cols() != d || psi.size() != d * d) {
    throw DimensionError("doubled-mode operator does not match state dimension");
  }
  return d;
}

}  // namespace

ThermalParams bogoliubov_params(double beta, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("bogoliubov_params: omega must be positive and finite");
  }
  if (std::isnan(beta) || beta <= 0.0) {
    throw DomainError("bogoliubov_params: beta must be positive (or zero temperature)");
  }
  ThermalParams p;
  p.beta = beta;
  p.omega = omega;
  if (beta == kZeroTemperature) return p;

  const double bw = beta * omega;
  const double t = std::exp(-0.5 * bw);
  p.theta = std::atanh(t);
  p.u = 1.0 / std::sqrt(-std::expm1(-bw));
  p.v = t * p.u;
  p.nbar = 1.0 / std::expm1(bw);
  return p;
}

ThermalParams params_from_nbar(double nbar, double omega) {
  if (std::isnan(nbar) || nbar < 0.0 || !std::isfinite(nbar)) {
    throw DomainError("params_from_nbar: nbar must be finite and non-negative");
  }
  if (nbar == 0.0) return bogoliubov_params(kZeroTemperature, omega);
  return bogoliubov_params(std::log1p(1.0 / nbar) / omega, omega);
}

double thermal_tail_mass(const ThermalParams& params, int cutoff) {
  const double t = params.tanh_theta();
  return std::pow(t, 2.0 * (cutoff + 1));
}

int cutoff_for_tail(const ThermalParams& params, double tail, int max_cutoff) {
  int n = 1;
  while (n < max_cutoff && thermal_tail_mass(params, n) >= tail) ++n;
  return n;
}

ThermalVacuum thermal_vacuum(const ThermalParams& params, int cutoff, double tail_tolerance) {
  require_cutoff(cutoff);
  const Index d = cutoff + 1;
  const double t = params.tanh_theta();
  ThermalVacuum out;
  out.state = StateVector::Zero(d * d);
  double amp = 1.0 / params.u;
  for (Index n = 0; n < d; ++n) {
    out.state(n * d + n) = amp;
    amp *= t;
  }
  out.state.normalize();
  out.tail_mass = thermal_tail_mass(params, cutoff);
  out.truncation_warning = out.tail_mass > tail_tolerance;
  return out;
}

ComplexMatrix thermal_density(const ThermalParams& params, int cutoff) {
  require_cutoff(cutoff);
  return thermal_weights(params, cutoff).cast<Complex>().asDiagonal();
}

StateVector apply_system(const ComplexMatrix& op, const StateVector& psi) {
  const Index d = doubled_side(psi, op);
  // Column-major view: element (ñ, n) holds the amplitude of |n, ñ⟩.
  Eigen::Map<const ComplexMatrix> m(psi.data(), d, d);
  StateVector out(d * d);
  Eigen::Map<ComplexMatrix>(out.data(), d, d) = m * op.transpose();
  return out;
}

StateVector apply_tilde(const ComplexMatrix& op, const StateVector& psi) {
  const Index d = doubled_side(psi, op);
  Eigen::Map<const ComplexMatrix> m(psi.data(), d, d);
  StateVector out(d * d);
  Eigen::Map<ComplexMatrix>(out.data(), d, d) = op * m;
  return out;
}

Complex expectation_system(const StateVector& psi, const ComplexMatrix& op) {
  return psi.dot(apply_system(op, psi));
}

ComplexMatrix lift_system(const ComplexMatrix& op) {
  return tensor_product(op, identity(op.rows()));
}

ComplexMatrix lift_tilde(const ComplexMatrix& op) {
  return tensor_product(identity(op.rows()), op);
}

double truncated_excitation_norm(const ThermalParams& params, int cutoff) {
  require_cutoff(cutoff);
  const Eigen::VectorXd w = thermal_weights(params, cutoff);
  double acc = 0.0;
  // ĉ†|n⟩ = √(n+1)|n+1⟩ except at the top state, which truncation removes.
  for (int n = 0; n < cutoff; ++n) acc += w(n) * (n + 1);
  return std::sqrt(acc);
}

StateVector excited_thermofield(const ThermalParams& params, int cutoff) {
  const auto ops = FockOperators::make(cutoff);
  const StateVector raised = apply_system(ops.create, thermal_vacuum(params, cutoff).state);
  const double raw_norm = raised.norm() / params.u;
  if (std::abs(raw_norm - 1.0) > 1e-4) {
    throw TruncationError("excited_thermofield: cutoff " + std::to_string(cutoff) +
                          " too small (norm " + std::to_string(raw_norm) + ")");
  }
  return raised / raised.norm();
}

ThermofieldQubit::ThermofieldQubit(Complex a0, Complex a1, ThermalParams params, int cutoff)
    : a0_(a0), a1_(a1), params_(params), cutoff_(cutoff) {
  require_cutoff(cutoff);
  if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-10) {
    throw ContractError("ThermofieldQubit: |a0|^2 + |a1|^2 must equal 1");
  }
}

StateVector qubit_state(const ThermofieldQubit& q) {
  const StateVector vac = thermal_vacuum(q.params(), q.cutoff()).state;
  const StateVector exc = excited_thermofield(q.params(), q.cutoff());
  StateVector psi = q.a0() * vac + q.a1() * exc;
  psi.normalize();
  return psi;
}

ComplexMatrix thermofield_qubit_density(Complex a0, Complex a1, double u,
                                        const ComplexMatrix& rho, const ComplexMatrix& annihilate) {
  const ComplexMatrix create = annihilate.adjoint();
  return std::norm(a0) * rho + (std::conj(a0) * a1 / u) * (create * rho) +
         (std::conj(a1) * a0 / u) * (rho * annihilate) +
         (std::norm(a1) / (u * u)) * (create * rho * annihilate);
}

ComplexMatrix rho_psi(const ThermofieldQubit& q) {
  const auto ops = FockOperators::make(q.cutoff());
  return thermofield_qubit_density(q.a0(), q.a1(),
                                   truncated_excitation_norm(q.params(), q.cutoff()),
                                   thermal_density(q.params(), q.cutoff()), ops.annihilate);
}

double rho_psi_trace(const ThermofieldQubit& q) { return rho_psi(q).trace().real(); }

Complex vacuum_overlap(const ThermalParams& p1, const ThermalParams& p2, int cutoff) {
  if (p1.omega != p2.omega) {
    throw DomainError("vacuum_overlap: both vacua must share the mode frequency");
  }
  if (cutoff <= 0) {
    cutoff = std::max(cutoff_for_tail(p1, 1e-13), cutoff_for_tail(p2, 1e-13));
  }
  return thermal_vacuum(p1, cutoff).state.dot(thermal_vacuum(p2, cutoff).state);
}

double analytic_vacuum_overlap(const ThermalParams& p1, const ThermalParams& p2) {
  return 1.0 / std::cosh(p1.theta - p2.theta);
}

SuperposedVacuumExpectation superposed_vacuum_expectation(double mu, const ThermalParams& p1,
                                                          const ThermalParams& p2,
                                                          const ComplexMatrix& op) {
  if (std::isnan(mu) || mu < 0.0 || mu > 1.0) {
    throw DomainError("superposed_vacuum_expectation: mu must lie in [0, 1]");
  }
  if (op.rows() < 2 || op.rows() != op.cols()) {
    throw DimensionError("superposed_vacuum_expectation: operator must be square, dim >= 2");
  }
  const int cutoff = static_cast<int>(op.rows()) - 1;
  SuperposedVacuumExpectation out;
  out.abstract_value = mu * (thermal_density(p1, cutoff) * op).trace() +
                       (1.0 - mu) * (thermal_density(p2, cutoff) * op).trace();

  const StateVector v1 = thermal_vacuum(p1, cutoff).state;
  const StateVector v2 = thermal_vacuum(p2, cutoff).state;
  out.overlap = v1.dot(v2);
  StateVector psi = std::sqrt(mu) * v1 + std::sqrt(1.0 - mu) * v2;
  out.norm_squared = psi.squaredNorm();
  psi /= std::sqrt(out.norm_squared);
  out.numeric_value = expectation_system(psi, op);
  return out;
}

Complex superposed_vacuum_expectation(double mu, const ThermalParams& p1,
                                      const ThermalParams& p2, const ComplexMatrix& op,
                                      Engine engine) {
  const auto both = superposed_vacuum_expectation(mu, p1, p2, op);
  return engine == Engine::Abstract ? both.abstract_value : both.numeric_value;
}

TemperatureMixture::TemperatureMixture(std::vector<std::pair<double, double>> beta_weights)
    : weights_(std::move(beta_weights)) {
  if (weights_.empty()) throw DomainError("TemperatureMixture: no components");
  double total = 0.0;
  for (const auto& [beta, mu] : weights_) {
    if (std::isnan(beta) || beta <= 0.0) {
      throw DomainError("TemperatureMixture: beta must be positive or zero temperature");
    }
    if (std::isnan(mu) || mu < 0.0) throw DomainError("TemperatureMixture: negative weight");
    total += mu;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("TemperatureMixture: weights must sum to 1");
  }
}

ComplexMatrix mixture_density(const TemperatureMixture& mix, double omega, int cutoff) {
  require_cutoff(cutoff);
  ComplexMatrix out = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  for (const auto& [beta, mu] : mix.weights()) {
    out += mu * thermal_density(bogoliubov_params(beta, omega), cutoff);
  }
  return out;
}

}  // namespace tfd
