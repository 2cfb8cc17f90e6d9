#pragma once

// Spin-1/2 Gibbs state e^{−βω Ŝ₀}/Z and its Hadamard transform. Basis order
// is (|+½⟩, |−½⟩); the Hadamard is (1/√2)[[1, 1], [1, −1]].

#include "tfd/hilbert.hpp"

namespace tfd {

struct SpinGibbs {
  double beta_omega = 0.0;
  ComplexMatrix rho;           // 2×2, diagonal
  double partition = 2.0;      // Z = 2 cosh(βω/2)
};

SpinGibbs spin_gibbs(double beta_omega);

ComplexMatrix hadamard_matrix();

/// H ρ H†
ComplexMatrix hadamard_transform(const SpinGibbs& s);

/// (1/2Z) Σ_{s=±} e^{sβω/2} (|½⟩ + s|−½⟩)(⟨½| + s⟨−½|), as printed. Its
/// off-diagonal has the opposite sign to hadamard_transform; the diagonal and
/// the off-diagonal magnitude agree.
ComplexMatrix hadamard_printed_form(const SpinGibbs& s);

/// ‖H(HρH†)H† − ρ‖
double verify_gibbs_reversibility(const SpinGibbs& s);

}  // namespace tfd
