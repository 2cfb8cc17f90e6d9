#pragma once

// Photon-statistics and entropy diagnostics.

#include <stdexcept>
#include <string>

#include "tfd/gates.hpp"
#include "tfd/hilbert.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

enum class MandelRegime { SubPoissonian, Poissonian, SuperPoissonian };

std::string to_string(MandelRegime r);

struct MandelReport {
  double mean = 0.0;               ///< ⟨n̂⟩
  double second_factorial = 0.0;   ///< ⟨n̂² − n̂⟩
  double q = 0.0;
  MandelRegime regime = MandelRegime::Poissonian;
};

/// ⟨n̂⟩ at or below the tolerance; the raw moments are kept for inspection.
class UndefinedMandelError : public std::domain_error {
 public:
  UndefinedMandelError(double mean, double second_factorial);
  double mean() const { return mean_; }
  double second_factorial() const { return second_factorial_; }

 private:
  double mean_;
  double second_factorial_;
};

inline constexpr double kMandelMeanTolerance = 1e-12;
inline constexpr double kPoissonianTolerance = 1e-9;

/// Q = (Tr ρ(n̂² − n̂) − (Tr ρn̂)²) / Tr ρn̂ for a density on |0..N⟩.
MandelReport mandel_q(const ComplexMatrix& rho, double mean_tolerance = kMandelMeanTolerance);
/// Same from a normalized single-mode state vector.
MandelReport mandel_q(const StateVector& psi, double mean_tolerance = kMandelMeanTolerance);
/// Same from raw moments.
MandelReport mandel_from_moments(double mean, double second_factorial,
                                 double mean_tolerance = kMandelMeanTolerance);

struct GatedMandel {
  MandelReport from_state;    ///< moments in the gate-operated doubled-space state
  MandelReport from_density;  ///< traces against the conjugated density
  double discrepancy = 0.0;   ///< |Q_state − Q_density|
};

/// Q_G of |0_G(β)⟩ versus mandel_q(Uρ^thU†); throws ConsistencyError above 1e-10.
GatedMandel mandel_q_gated_vacuum(const GateOp& g, const ThermalParams& params, int cutoff);

/// Q_G^ψ of |ψ^(G)(β)⟩ versus traces of ρ_ψ^(G); throws ConsistencyError above 1e-8.
GatedMandel mandel_q_gated_qubit(const GateOp& g, const ThermofieldQubit& q);

/// −Σ λ log λ over eigenvalues above 1e-15; eigenvalues below −1e-10 raise
/// InvalidDensityError.
double von_neumann_entropy(const ComplexMatrix& rho);

/// (n̄+1) log(n̄+1) − n̄ log n̄
double thermal_entropy(double nbar);

}  // namespace tfd
