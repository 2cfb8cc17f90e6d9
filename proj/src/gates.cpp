#include "tfd/gates.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

void require_gate_dim(const GateOp& g, int cutoff) {
  if (g.dim() != cutoff + 1) {
    throw DimensionError("gate dimension does not match cutoff + 1");
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace

GateOp::GateOp(std::string name, ComplexMatrix unitary)
    : name_(std::move(name)), unitary_(std::move(unitary)) {
  if (unitary_.rows() != unitary_.cols() || unitary_.rows() == 0) {
    throw DimensionError("GateOp: unitary must be square and non-empty");
  }
  const double err = (unitary_ * unitary_.adjoint() - tfd::identity(unitary_.rows()))
                         .cwiseAbs()
                         .maxCoeff();
  if (err > 1e-10) {
    throw ContractError("GateOp '" + name_ + "' is not unitary");
  }
  lifted_ = tensor_product(unitary_, tfd::identity(unitary_.rows()));
}

GateOp GateOp::identity(Index dim) { return GateOp("identity", tfd::identity(dim)); }

GateOp GateOp::phase(Index dim, double phi) {
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) u(n, n) = std::polar(1.0, phi * static_cast<double>(n));
  return GateOp("phase", std::move(u));
}

GateOp GateOp::random(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    for (Index r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return GateOp("random-" + std::to_string(seed), std::move(q));
}

ComplexMatrix conjugate_operator(const GateOp& g, const ComplexMatrix& a) {
  if (a.rows() != g.dim() || a.cols() != g.dim()) {
    throw DimensionError("conjugate_operator: operator dimension differs from gate");
  }
  return g.unitary() * a * g.unitary().adjoint();
}

StateVector gate_vacuum(const GateOp& g, const ThermalParams& params, int cutoff) {
  require_gate_dim(g, cutoff);
  return apply_system(g.unitary(), thermal_vacuum(params, cutoff).state);
}

StateVector gate_excited(const GateOp& g, const ThermalParams& params, int cutoff) {
  require_gate_dim(g, cutoff);
  const auto ops = FockOperators::make(cutoff);
  const ComplexMatrix create_g = conjugate_operator(g, ops.create);
  const StateVector via_creation = apply_system(create_g, gate_vacuum(g, params, cutoff)) /
                                   truncated_excitation_norm(params, cutoff);
  const StateVector via_gate = apply_system(g.unitary(), excited_thermofield(params, cutoff));
  const double gap = (via_creation - via_gate).norm();
  if (gap > 1e-8) {
    throw ConsistencyError("gate_excited: construction paths differ by " + std::to_string(gap));
  }
  return via_creation;
}

StateVector gated_qubit_state(const GateOp& g, const ThermofieldQubit& q) {
  require_gate_dim(g, q.cutoff());
  return apply_system(g.unitary(), qubit_state(q));
}

ComplexMatrix rho_psi_gated(const GateOp& g, const ThermofieldQubit& q) {
  require_gate_dim(g, q.cutoff());
  const auto ops = FockOperators::make(q.cutoff());
  return thermofield_qubit_density(q.a0(), q.a1(),
                                   truncated_excitation_norm(q.params(), q.cutoff()),
                                   conjugate_operator(g, thermal_density(q.params(), q.cutoff())),
                                   conjugate_operator(g, ops.annihilate));
}

CommutatorResidual check_bogoliubov_commutator(const GateOp& g, const ThermalParams& params,
                                               int cutoff) {
  require_gate_dim(g, cutoff);
  if (cutoff < 2) throw DomainError("check_bogoliubov_commutator: cutoff must be >= 2");
  const auto ops = FockOperators::make(cutoff);
  const double u = params.u;
  const double v = params.v;

  const ComplexMatrix c = lift_system(ops.annihilate);
  const ComplexMatrix c_tilde = lift_tilde(ops.annihilate);
  const ComplexMatrix b = u * c - v * c_tilde.adjoint();
  const ComplexMatrix b_tilde = u * c_tilde - v * c.adjoint();

  const ComplexMatrix& ug = g.lifted();
  const ComplexMatrix ug_dag = ug.adjoint();
  const ComplexMatrix create_g = ug * c.adjoint() * ug_dag;

  const ComplexMatrix lhs = commutator(ug, create_g);
  const ComplexMatrix combined = u * b.adjoint() + v * b_tilde;
  const ComplexMatrix gated_rhs = commutator(ug, ug * combined * ug_dag);
  const ComplexMatrix literal_rhs = commutator(ug, combined);

  // Basis states |n, ñ⟩ with n, ñ <= cutoff - 2.
  const Index d = cutoff + 1;
  std::vector<Index> block;
  for (Index n = 0; n + 2 < d; ++n) {
    for (Index m = 0; m + 2 < d; ++m) block.push_back(n * d + m);
  }
  auto restricted_norm = [&](const ComplexMatrix& diff) {
    ComplexMatrix sub(block.size(), block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) sub(i, j) = diff(block[i], block[j]);
    }
    return operator_norm(sub);
  };

  CommutatorResidual out;
  out.residual = restricted_norm(lhs - gated_rhs);
  out.literal_residual = restricted_norm(lhs - literal_rhs);
  return out;
}

}  // namespace tfd
