#pragma once

// Thermal states of a single bosonic mode in the doubled (thermofield) space.
//
// Conventions: u = cosh θ, v = sinh θ, tanh θ = exp(−βω/2) and the mean
// occupation is Bose-Einstein, n̄ = sinh²θ = 1/(exp(βω) − 1). β = +∞ is the
// zero-temperature sentinel (θ = 0). Doubled-space states are indexed
// n·(N+1) + ñ with the physical mode first.

#include <limits>
#include <utility>
#include <vector>

#include "tfd/hilbert.hpp"

namespace tfd {

inline constexpr double kZeroTemperature = std::numeric_limits<double>::infinity();

enum class Engine { Abstract, Numeric };

struct ThermalParams {
  double beta = kZeroTemperature;
  double omega = 1.0;
  double theta = 0.0;
  double u = 1.0;
  double v = 0.0;
  double nbar = 0.0;

  bool zero_temperature() const { return beta == kZeroTemperature; }
  double tanh_theta() const { return u == 0.0 ? 0.0 : v / u; }
};

/// Bogoliubov parameters for inverse temperature `beta` (> 0 or
/// kZeroTemperature) and mode frequency `omega` (> 0).
ThermalParams bogoliubov_params(double beta, double omega = 1.0);

/// Inverse of the Bose-Einstein relation; nbar = 0 gives zero temperature.
ThermalParams params_from_nbar(double nbar, double omega = 1.0);

/// Weight of the thermal vacuum above the cutoff: tanh^{2(N+1)} θ.
double thermal_tail_mass(const ThermalParams& params, int cutoff);

/// Smallest cutoff whose tail mass is below `tail`, capped at `max_cutoff`.
int cutoff_for_tail(const ThermalParams& params, double tail, int max_cutoff = 4000);

struct ThermalVacuum {
  StateVector state;
  double tail_mass = 0.0;
  bool truncation_warning = false;
};

/// |0(β)⟩ = Σ_n (tanhⁿθ / cosh θ)|n, ñ⟩ truncated at `cutoff` and
/// renormalized. A tail mass above `tail_tolerance` sets the warning flag.
ThermalVacuum thermal_vacuum(const ThermalParams& params, int cutoff,
                             double tail_tolerance = 1e-6);

/// Diagonal Σ n̄ⁿ/(n̄+1)ⁿ⁺¹ |n⟩⟨n| on |0..cutoff⟩, renormalized. This is the
/// physical-sector reduction of thermal_vacuum at the same cutoff.
ComplexMatrix thermal_density(const ThermalParams& params, int cutoff);

// Operators on one factor of a doubled mode, applied without forming O ⊗ I.
StateVector apply_system(const ComplexMatrix& op, const StateVector& psi);
StateVector apply_tilde(const ComplexMatrix& op, const StateVector& psi);
/// ⟨ψ|(O ⊗ I)|ψ⟩
Complex expectation_system(const StateVector& psi, const ComplexMatrix& op);

/// Dense O ⊗ I and I ⊗ O on the doubled space.
ComplexMatrix lift_system(const ComplexMatrix& op);
ComplexMatrix lift_tilde(const ComplexMatrix& op);

/// ‖(ĉ† ⊗ I)|0(β)⟩‖ on the truncated space. Equals u = cosh θ as the cutoff
/// grows; used wherever |1(β)⟩ is normalized so that truncated identities
/// hold exactly.
double truncated_excitation_norm(const ThermalParams& params, int cutoff);

/// |1(β)⟩ = (ĉ† ⊗ I)|0(β)⟩ / u. Throws TruncationError when the raw norm
/// (with the exact u) deviates from 1 by more than 1e-4.
StateVector excited_thermofield(const ThermalParams& params, int cutoff);

class ThermofieldQubit {
 public:
  /// Requires |a0|² + |a1|² = 1 within 1e-10.
  ThermofieldQubit(Complex a0, Complex a1, ThermalParams params, int cutoff);

  Complex a0() const { return a0_; }
  Complex a1() const { return a1_; }
  const ThermalParams& params() const { return params_; }
  int cutoff() const { return cutoff_; }

 private:
  Complex a0_;
  Complex a1_;
  ThermalParams params_;
  int cutoff_;
};

/// a0|0(β)⟩ + a1|1(β)⟩ on the doubled space.
StateVector qubit_state(const ThermofieldQubit& q);

/// Physical-sector density reproducing the qubit's expectations,
/// Σ_{j,j′} a_j* a_j′ ĉ†^{j′} ρ^th ĉ^{j} / u^{j+j′}, so that
/// Tr(ρ_ψ O) = ⟨ψ(β)|O ⊗ I|ψ(β)⟩. u is the truncated excitation norm.
ComplexMatrix rho_psi(const ThermofieldQubit& q);

/// The four-term expansion shared by rho_psi and its gate-conjugated form:
/// |a0|²ρ + (a0* a1/u) ĉ†ρ + (a1* a0/u) ρĉ + (|a1|²/u²) ĉ†ρĉ.
ComplexMatrix thermofield_qubit_density(Complex a0, Complex a1, double u,
                                        const ComplexMatrix& rho, const ComplexMatrix& annihilate);

/// Tr ρ_ψ, measured rather than forced to 1.
double rho_psi_trace(const ThermofieldQubit& q);

/// ⟨0(β)|0(β′)⟩ from explicit truncated vectors. With cutoff = 0 the cutoff
/// is chosen so that both tail masses are below 1e-13.
Complex vacuum_overlap(const ThermalParams& p1, const ThermalParams& p2, int cutoff = 0);

/// 1 / cosh(θ − θ′)
double analytic_vacuum_overlap(const ThermalParams& p1, const ThermalParams& p2);

struct SuperposedVacuumExpectation {
  Complex abstract_value;  ///< μ⟨O⟩_β + (1−μ)⟨O⟩_β′, vacua taken orthonormal
  Complex numeric_value;   ///< full expectation of the renormalized superposition
  Complex overlap;         ///< ⟨0(β)|0(β′)⟩ at the working cutoff
  double norm_squared = 1.0;  ///< ‖√μ|0(β)⟩ + √(1−μ)|0(β′)⟩‖² before renormalization
};

/// Expectation of a physical-sector operator `op` (dim cutoff+1) in
/// √μ|0(β)⟩ + √(1−μ)|0(β′)⟩ evaluated by both engines.
SuperposedVacuumExpectation superposed_vacuum_expectation(double mu, const ThermalParams& p1,
                                                          const ThermalParams& p2,
                                                          const ComplexMatrix& op);

Complex superposed_vacuum_expectation(double mu, const ThermalParams& p1,
                                      const ThermalParams& p2, const ComplexMatrix& op,
                                      Engine engine);

/// Discretized temperature distribution Σ μ_k ρ_{β_k}.
class TemperatureMixture {
 public:
  /// Weights must be non-negative and sum to 1 within 1e-12; betas > 0 or
  /// kZeroTemperature.
  explicit TemperatureMixture(std::vector<std::pair<double, double>> beta_weights);

  const std::vector<std::pair<double, double>>& weights() const { return weights_; }

 private:
  std::vector<std::pair<double, double>> weights_;
};

ComplexMatrix mixture_density(const TemperatureMixture& mix, double omega, int cutoff);

}  // namespace tfd
