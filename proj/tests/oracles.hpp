#pragma once

// Straightforward loop implementations used as references in the tests. They
// share no code with the library beyond the matrix types.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tfd/hilbert.hpp"

namespace oracle {

using tfd::Complex;
using tfd::ComplexMatrix;
using tfd::Index;
using tfd::StateVector;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    for (Index k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
  return out;
}

inline ComplexMatrix annihilator(int cutoff) {
  ComplexMatrix a = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline ComplexMatrix number(int cutoff) {
  ComplexMatrix a = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) a(n, n) = n;
  return a;
}

// Tr over the second factor of a two-factor density (da × db).
inline ComplexMatrix trace_second(const ComplexMatrix& rho, Index da, Index db) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      for (Index k = 0; k < db; ++k) out(i, j) += rho(i * db + k, j * db + k);
  return out;
}

inline ComplexMatrix trace_first(const ComplexMatrix& rho, Index da, Index db) {
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j)
      for (Index k = 0; k < da; ++k) out(i, j) += rho(k * db + i, k * db + j);
  return out;
}

inline double bose_einstein(double beta, double omega = 1.0) {
  return 1.0 / (std::exp(beta * omega) - 1.0);
}

inline double beta_for_nbar(double nbar) { return std::log(1.0 + 1.0 / nbar); }

// Thermal vacuum amplitudes tⁿ, renormalized over |0..N⟩, on the paired
// basis |n, ñ⟩.
inline StateVector thermal_vacuum(double beta, int cutoff) {
  const Index d = cutoff + 1;
  const double t = std::exp(-beta / 2.0);
  StateVector v = StateVector::Zero(d * d);
  double norm2 = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    v(n * d + n) = std::pow(t, n);
    norm2 += std::pow(t, 2 * n);
  }
  return v / std::sqrt(norm2);
}

inline ComplexMatrix thermal_density(double beta, int cutoff) {
  ComplexMatrix rho = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  double z = 0.0;
  for (int n = 0; n <= cutoff; ++n) z += std::exp(-beta * n);
  for (int n = 0; n <= cutoff; ++n) rho(n, n) = std::exp(-beta * n) / z;
  return rho;
}

inline std::vector<std::pair<Complex, Complex>> random_amplitudes(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  std::vector<std::pair<Complex, Complex>> out;
  for (int k = 0; k < count; ++k) {
    Complex a0(g(rng), g(rng));
    Complex a1(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a0) + std::norm(a1));
    out.emplace_back(a0 / n, a1 / n);
  }
  return out;
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
