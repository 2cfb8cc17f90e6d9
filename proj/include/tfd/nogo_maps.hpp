#pragma once

// Doubling and cloning maps, temperature maps between thermal densities, and
// broadcasting checks on bipartite candidates.

#include <utility>

#include "tfd/hilbert.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

/// |n⟩ ↦ |n, ñ⟩ on the doubled space of the given cutoff.
StateVector doubling_map(int n, int cutoff);

/// Same map applied to a ket; only single-component kets (basis states, any
/// amplitude) are accepted. Superpositions raise UnsupportedInputError since
/// the map has no linear extension.
StateVector doubling_map(const StateVector& ket);

/// ψ ↦ ψ ⊗ ψ. Requires ‖ψ‖ = 1 within 1e-10.
StateVector clone_map(const StateVector& psi, Index max_dim = kDefaultMaxDim);

/// ‖C(a0 e0 + a1 e1) − (a0 C(e0) + a1 C(e1))‖ for orthonormal e0, e1.
double cloning_linearity_gap(Complex a0, Complex a1, const StateVector& e0, const StateVector& e1,
                             Index max_dim = kDefaultMaxDim);

/// Re-prepares a thermal density at the target temperature. The input must
/// be diagonal with geometric weights (checked to 1e-8); otherwise DomainError.
ComplexMatrix temperature_map(const ComplexMatrix& rho_beta, const ThermalParams& target);

/// True if `rho` is diagonal with weights p(n+1)/p(n) constant within `tol`.
bool is_thermal_density(const ComplexMatrix& rho, double tol = 1e-8);

struct BroadcastReport {
  ComplexMatrix input_rho;
  ComplexMatrix joint_state;
  ComplexMatrix traced_a;  ///< Tr_A(joint), the state left on B
  ComplexMatrix traced_b;  ///< Tr_B(joint), the state left on A
  double deviation_a = 0.0;  ///< ‖Tr_A(joint) − ρ‖
  double deviation_b = 0.0;  ///< ‖Tr_B(joint) − ρ‖
  bool is_broadcast = false;
};

inline constexpr double kBroadcastTolerance = 1e-10;

/// Both reductions of a joint density on H ⊗ H (each of dim(rho_ref)) compared
/// to rho_ref in operator norm.
BroadcastReport broadcast_check(const ComplexMatrix& joint, const ComplexMatrix& rho_ref);

/// μ ρ ⊗ |0⟩⟨0| + (1−μ) |0⟩⟨0| ⊗ ρ
ComplexMatrix swap_mixture_state(const ComplexMatrix& rho, double mu);
/// μ ρ ⊗ ρ + (1−μ) |0⟩⟨0| ⊗ |0⟩⟨0|
ComplexMatrix product_mixture_state(const ComplexMatrix& rho, double mu);

struct ThermalBroadcast {
  ComplexMatrix joint_state;       ///< ρ_β″ ⊗ ρ_β′ (A ⊗ B)
  BroadcastReport against_first;   ///< deviation_a measures Tr_A(joint) vs ρ_β′
  BroadcastReport against_second;  ///< deviation_b measures Tr_B(joint) vs ρ_β″
  bool reproduces_targets = false; ///< both of the above below 1e-10
};

/// Product joint state with Tr_A(joint) = T(ρ_β) = ρ_β′ and
/// Tr_B(joint) = T′(ρ_β) = ρ_β″.
ThermalBroadcast thermal_broadcast_maps(const ComplexMatrix& rho_beta, const ThermalParams& target1,
                                        const ThermalParams& target2);

}  // namespace tfd
