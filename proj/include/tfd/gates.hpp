#pragma once

// Gates on the physical sector of a thermofield mode. A gate U acts on the
// doubled space as U ⊗ I; tilde-side gates are not modelled.

#include <cstdint>
#include <string>

#include "tfd/hilbert.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

class GateOp {
 public:
  /// Throws ContractError unless U·U† = I within 1e-10.
  GateOp(std::string name, ComplexMatrix unitary);

  static GateOp identity(Index dim);
  /// diag(1, e^{iφ}, e^{2iφ}, ...): commutes with n̂.
  static GateOp phase(Index dim, double phi);
  /// Haar-like unitary from the QR factorization of a seeded complex
  /// Gaussian matrix (phases of R's diagonal folded into Q).
  static GateOp random(Index dim, std::uint64_t seed);

  const std::string& name() const { return name_; }
  const ComplexMatrix& unitary() const { return unitary_; }
  /// U ⊗ I on the doubled space.
  const ComplexMatrix& lifted() const { return lifted_; }
  Index dim() const { return unitary_.rows(); }

 private:
  std::string name_;
  ComplexMatrix unitary_;
  ComplexMatrix lifted_;
};

/// U A U†
ComplexMatrix conjugate_operator(const GateOp& g, const ComplexMatrix& a);

/// |0_G(β)⟩ = (U ⊗ I)|0(β)⟩
StateVector gate_vacuum(const GateOp& g, const ThermalParams& params, int cutoff);

/// |1_G(β)⟩ built as (ĉ_G† ⊗ I)|0_G(β)⟩ / u and cross-checked against
/// (U ⊗ I)|1(β)⟩; throws ConsistencyError if they differ by more than 1e-8.
StateVector gate_excited(const GateOp& g, const ThermalParams& params, int cutoff);

/// Σ_j a_j |j_G(β)⟩
StateVector gated_qubit_state(const GateOp& g, const ThermofieldQubit& q);

/// Σ a_j* a_j′ ĉ_G†^{j′} ρ_G ĉ_G^{j} / u^{j+j′} with ρ_G = Uρ^thU† and
/// ĉ_G = UĉU†. Equals U ρ_ψ U†.
ComplexMatrix rho_psi_gated(const GateOp& g, const ThermofieldQubit& q);

struct CommutatorResidual {
  /// ‖[U_G, ĉ_G†] − u[U_G, b_G†(β)] − v[U_G, b̃_G(β)]‖ with the thermal
  /// operators conjugated by the gate.
  double residual = 0.0;
  /// Same with the unconjugated b(β), b̃(β); not an identity for generic U.
  double literal_residual = 0.0;
};

/// Evaluates both sides of the gated Bogoliubov commutator relation on the
/// doubled space, restricted to the block n, ñ ≤ cutoff − 2. Thermal
/// operators: b = u ĉ ⊗ I − v I ⊗ c̃†, b̃ = u I ⊗ c̃ − v ĉ† ⊗ I.
CommutatorResidual check_bogoliubov_commutator(const GateOp& g, const ThermalParams& params,
                                               int cutoff);

}  // namespace tfd
