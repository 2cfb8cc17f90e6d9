#include "tfd/spin_gibbs.hpp"

#include <cmath>

#include "tfd/errors.hpp"

namespace tfd {

SpinGibbs spin_gibbs(double beta_omega) {
  if (!std::isfinite(beta_omega)) {
    throw DomainError("spin_gibbs: beta*omega must be finite");
  }
  SpinGibbs s;
  s.beta_omega = beta_omega;
  s.partition = 2.0 * std::cosh(0.5 * beta_omega);
  // Weights normalized through a logistic form so large |βω| stays finite.
  const double w_up = 1.0 / (1.0 + std::exp(beta_omega));
  const double w_down = 1.0 / (1.0 + std::exp(-beta_omega));
  s.rho = ComplexMatrix::Zero(2, 2);
  s.rho(0, 0) = w_up;
  s.rho(1, 1) = w_down;
  return s;
}

ComplexMatrix hadamard_matrix() {
  ComplexMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

ComplexMatrix hadamard_transform(const SpinGibbs& s) {
  const ComplexMatrix h = hadamard_matrix();
  return h * s.rho * h.adjoint();
}

ComplexMatrix hadamard_printed_form(const SpinGibbs& s) {
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (const double sign : {1.0, -1.0}) {
    StateVector ket(2);
    ket << 1.0, sign;
    // e^{sβω/2}/(2Z) = 1/(2(1 + e^{−sβω}))
    out += (0.5 / (1.0 + std::exp(-sign * s.beta_omega))) * (ket * ket.adjoint());
  }
  return out;
}

double verify_gibbs_reversibility(const SpinGibbs& s) {
  const ComplexMatrix h = hadamard_matrix();
  const ComplexMatrix once = hadamard_transform(s);
  return operator_norm(h * once * h.adjoint() - s.rho);
}

}  // namespace tfd
