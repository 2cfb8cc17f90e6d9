#include "tfd/nogo_maps.hpp"

#include <array>
#include <cmath>

#include "tfd/errors.hpp"

namespace tfd {

StateVector doubling_map(int n, int cutoff) {
  if (cutoff < 1 || n < 0 || n > cutoff) {
    throw DomainError("doubling_map: Fock index outside 0..cutoff");
  }
  const Index side = cutoff + 1;
  return basis_ket(side * side, static_cast<Index>(n) * side + n);
}

StateVector doubling_map(const StateVector& ket) {
  Index support = -1;
  for (Index k = 0; k < ket.size(); ++k) {
    if (std::abs(ket(k)) > 1e-12) {
      if (support >= 0) {
        throw UnsupportedInputError(
            "doubling_map: defined on Fock basis states only; superpositions cannot be doubled");
      }
      support = k;
    }
  }
  if (support < 0 || ket.size() < 2) throw UnsupportedInputError("doubling_map: zero ket");
  StateVector out = doubling_map(static_cast<int>(support), static_cast<int>(ket.size()) - 1);
  return ket(support) * out;
}

StateVector clone_map(const StateVector& psi, Index max_dim) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw ContractError("clone_map: input not normalized");
  return tensor_product(psi, psi, max_dim);
}

double cloning_linearity_gap(Complex a0, Complex a1, const StateVector& e0, const StateVector& e1,
                             Index max_dim) {
  if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-10) {
    throw ContractError("cloning_linearity_gap: amplitudes not normalized");
  }
  if (e0.size() != e1.size() || std::abs(e0.dot(e1)) > 1e-10 ||
      std::abs(e0.norm() - 1.0) > 1e-10 || std::abs(e1.norm() - 1.0) > 1e-10) {
    throw ContractError("cloning_linearity_gap: basis must be orthonormal");
  }
  const StateVector psi = a0 * e0 + a1 * e1;
  const StateVector linear = a0 * clone_map(e0, max_dim) + a1 * clone_map(e1, max_dim);
  return (clone_map(psi, max_dim) - linear).norm();
}

bool is_thermal_density(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) return false;
  const Index d = rho.rows();
  ComplexMatrix off = rho;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - 1.0) > tol) return false;
  const Eigen::VectorXd p = rho.diagonal().real();
  if (p.minCoeff() < -tol || p(0) <= tol) return false;
  // Geometric weights: p(n) = p(0) qⁿ.
  const double q = p(1) / p(0);
  if (q < -tol || q >= 1.0) return false;
  double expected = p(0);
  for (Index n = 0; n < d; ++n) {
    if (std::abs(p(n) - expected) > tol) return false;
    expected *= q;
  }
  return true;
}

ComplexMatrix temperature_map(const ComplexMatrix& rho_beta, const ThermalParams& target) {
  if (!is_thermal_density(rho_beta)) {
    throw DomainError("temperature_map: input is not a thermal density");
  }
  return thermal_density(target, static_cast<int>(rho_beta.rows()) - 1);
}

BroadcastReport broadcast_check(const ComplexMatrix& joint, const ComplexMatrix& rho_ref) {
  const Index d = rho_ref.rows();
  if (rho_ref.cols() != d || joint.rows() != d * d || joint.cols() != d * d) {
    throw DimensionError("broadcast_check: joint state must live on H ⊗ H with H = dim(rho)");
  }
  if (!is_hermitian(joint, 1e-10) || std::abs(joint.trace() - 1.0) > 1e-10) {
    throw InvalidDensityError("broadcast_check: joint state is not a density matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(joint, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidDensityError("broadcast_check: joint state has a negative eigenvalue");
  }
  const std::array<Index, 2> dims{d, d};
  BroadcastReport r;
  r.input_rho = rho_ref;
  r.joint_state = joint;
  r.traced_a = partial_trace(joint, dims, 1);
  r.traced_b = partial_trace(joint, dims, 0);
  r.deviation_a = operator_norm(r.traced_a - rho_ref);
  r.deviation_b = operator_norm(r.traced_b - rho_ref);
  r.is_broadcast = r.deviation_a < kBroadcastTolerance && r.deviation_b < kBroadcastTolerance;
  return r;
}

namespace {

ComplexMatrix vacuum_projector(Index d) { return projector(basis_ket(d, 0)); }

void require_mu(double mu) {
  if (std::isnan(mu) || mu < 0.0 || mu > 1.0) throw DomainError("mu must lie in [0, 1]");
}

}  // namespace

ComplexMatrix swap_mixture_state(const ComplexMatrix& rho, double mu) {
  require_mu(mu);
  const ComplexMatrix vac = vacuum_projector(rho.rows());
  return mu * tensor_product(rho, vac) + (1.0 - mu) * tensor_product(vac, rho);
}

ComplexMatrix product_mixture_state(const ComplexMatrix& rho, double mu) {
  require_mu(mu);
  const ComplexMatrix vac = vacuum_projector(rho.rows());
  return mu * tensor_product(rho, rho) + (1.0 - mu) * tensor_product(vac, vac);
}

ThermalBroadcast thermal_broadcast_maps(const ComplexMatrix& rho_beta, const ThermalParams& target1,
                                        const ThermalParams& target2) {
  const ComplexMatrix first = temperature_map(rho_beta, target1);
  const ComplexMatrix second = temperature_map(rho_beta, target2);
  ThermalBroadcast out;
  out.joint_state = tensor_product(second, first);
  out.against_first = broadcast_check(out.joint_state, first);
  out.against_second = broadcast_check(out.joint_state, second);
  out.reproduces_targets = out.against_first.deviation_a < kBroadcastTolerance &&
                           out.against_second.deviation_b < kBroadcastTolerance;
  return out;
}

}  // namespace tfd
