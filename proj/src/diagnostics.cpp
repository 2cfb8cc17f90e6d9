#include "tfd/diagnostics.hpp"

#include <cmath>

#include "tfd/errors.hpp"

namespace tfd {

std::string to_string(MandelRegime r) {
  switch (r) {
    case MandelRegime::SubPoissonian: return "sub-Poissonian";
    case MandelRegime::Poissonian: return "Poissonian";
    case MandelRegime::SuperPoissonian: return "super-Poissonian";
  }
  return "?";
}

UndefinedMandelError::UndefinedMandelError(double mean, double second_factorial)
    : std::domain_error("Mandel Q undefined: mean occupation " + std::to_string(mean) +
                        " is below tolerance"),
      mean_(mean),
      second_factorial_(second_factorial) {}

MandelReport mandel_from_moments(double mean, double second_factorial, double mean_tolerance) {
  if (!(mean > mean_tolerance)) throw UndefinedMandelError(mean, second_factorial);
  MandelReport r;
  r.mean = mean;
  r.second_factorial = second_factorial;
  r.q = (second_factorial - mean * mean) / mean;
  if (std::abs(r.q) < kPoissonianTolerance) {
    r.regime = MandelRegime::Poissonian;
  } else {
    r.regime = r.q < 0.0 ? MandelRegime::SubPoissonian : MandelRegime::SuperPoissonian;
  }
  return r;
}

MandelReport mandel_q(const ComplexMatrix& rho, double mean_tolerance) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) {
    throw DimensionError("mandel_q: density must be square with dim >= 2");
  }
  const auto ops = FockOperators::make(static_cast<int>(rho.rows()) - 1);
  const ComplexMatrix rn = rho * ops.number;
  const double mean = rn.trace().real();
  const double second = (rn * ops.number).trace().real() - mean;
  return mandel_from_moments(mean, second, mean_tolerance);
}

MandelReport mandel_q(const StateVector& psi, double mean_tolerance) {
  if (psi.size() < 2) throw DimensionError("mandel_q: state dim must be >= 2");
  double mean = 0.0;
  double second = 0.0;
  for (Index n = 0; n < psi.size(); ++n) {
    const double p = std::norm(psi(n));
    const double nn = static_cast<double>(n);
    mean += p * nn;
    second += p * nn * (nn - 1.0);
  }
  return mandel_from_moments(mean, second, mean_tolerance);
}

namespace {

GatedMandel compare(MandelReport from_state, MandelReport from_density, double tol,
                    const char* what) {
  GatedMandel out{from_state, from_density, std::abs(from_state.q - from_density.q)};
  if (out.discrepancy > tol) {
    throw ConsistencyError(std::string(what) + ": state and density paths differ by " +
                           std::to_string(out.discrepancy));
  }
  return out;
}

MandelReport doubled_state_mandel(const StateVector& psi, int cutoff) {
  const auto ops = FockOperators::make(cutoff);
  const double mean = expectation_system(psi, ops.number).real();
  const double second =
      expectation_system(psi, ops.number * ops.number - ops.number).real();
  return mandel_from_moments(mean, second);
}

}  // namespace

GatedMandel mandel_q_gated_vacuum(const GateOp& g, const ThermalParams& params, int cutoff) {
  return compare(doubled_state_mandel(gate_vacuum(g, params, cutoff), cutoff),
                 mandel_q(conjugate_operator(g, thermal_density(params, cutoff))), 1e-10,
                 "mandel_q_gated_vacuum");
}

GatedMandel mandel_q_gated_qubit(const GateOp& g, const ThermofieldQubit& q) {
  const ComplexMatrix rho_g = rho_psi_gated(g, q);
  const auto ops = FockOperators::make(q.cutoff());
  const ComplexMatrix rn = rho_g * ops.number;
  const double mean = rn.trace().real();
  const double second = (rn * ops.number).trace().real() - mean;
  return compare(doubled_state_mandel(gated_qubit_state(g, q), q.cutoff()),
                 mandel_from_moments(mean, second), 1e-8, "mandel_q_gated_qubit");
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) throw DimensionError("von_neumann_entropy: non-square input");
  if (!is_hermitian(rho, 1e-10)) throw InvalidDensityError("von_neumann_entropy: not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double lambda = eig.eigenvalues()(k);
    if (lambda < -1e-10) {
      throw InvalidDensityError("von_neumann_entropy: negative eigenvalue " +
                                std::to_string(lambda));
    }
    if (lambda > 1e-15) s -= lambda * std::log(lambda);
  }
  return s;
}

double thermal_entropy(double nbar) {
  if (nbar <= 0.0) return 0.0;
  return (nbar + 1.0) * std::log1p(nbar) - nbar * std::log(nbar);
}

}  // namespace tfd
