#include "tfd/hilbert.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

void check_product_dim(Index a, Index b, Index max_dim) {
  if (a <= 0 || b <= 0) {
    throw DimensionError("tensor_product: empty operand");
  }
  if (a > max_dim / b) {
    throw DimensionError("tensor_product: dimension " + std::to_string(a) + "x" +
                         std::to_string(b) + " exceeds maximum " + std::to_string(max_dim));
  }
}

Index product_of(std::span<const Index> dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

}  // namespace

FockOperators FockOperators::make(int cutoff) {
  if (cutoff < 1) {
    throw DomainError("FockOperators: cutoff must be >= 1");
  }
  FockOperators ops;
  ops.cutoff = cutoff;
  const Index d = cutoff + 1;
  ops.annihilate = ComplexMatrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) {
    ops.annihilate(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  ops.create = ops.annihilate.adjoint();
  ops.number = ops.create * ops.annihilate;
  return ops;
}

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

StateVector basis_ket(Index dim, Index k) {
  if (k < 0 || k >= dim) {
    throw DimensionError("basis_ket: index out of range");
  }
  StateVector v = StateVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

ComplexMatrix projector(const StateVector& psi) { return psi * psi.adjoint(); }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionError("tensor_product: operands must be square");
  }
  check_product_dim(a.rows(), b.rows(), max_dim);
  return Eigen::kroneckerProduct(a, b).eval();
}

StateVector tensor_product(const StateVector& a, const StateVector& b, Index max_dim) {
  check_product_dim(a.size(), b.size(), max_dim);
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const Index> dims,
                            std::size_t keep) {
  if (keep >= dims.size()) {
    throw DimensionError("partial_trace: kept subsystem out of range");
  }
  if (rho.rows() != rho.cols() || product_of(dims) != rho.rows()) {
    throw DimensionError("partial_trace: subsystem dims do not match the matrix");
  }
  // View the index as (outer, kept, inner) with strides inner·kept and inner.
  const Index kept = dims[keep];
  const Index outer = product_of(dims.subspan(0, keep));
  const Index inner = product_of(dims.subspan(keep + 1));
  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (Index i = 0; i < kept; ++i) {
    for (Index j = 0; j < kept; ++j) {
      Complex acc{0.0, 0.0};
      for (Index o = 0; o < outer; ++o) {
        for (Index n = 0; n < inner; ++n) {
          acc += rho((o * kept + i) * inner + n, (o * kept + j) * inner + n);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

StateVector partial_inner(const StateVector& bra, const StateVector& ket,
                          std::span<const Index> dims, std::span<const std::size_t> over) {
  if (product_of(dims) != ket.size()) {
    throw DimensionError("partial_inner: ket size does not match dims");
  }
  std::vector<bool> contracted(dims.size(), false);
  Index bra_dim = 1;
  for (std::size_t k = 0; k < over.size(); ++k) {
    if (over[k] >= dims.size() || (k > 0 && over[k] <= over[k - 1])) {
      throw DimensionError("partial_inner: contracted factors must be ascending and in range");
    }
    contracted[over[k]] = true;
    bra_dim *= dims[over[k]];
  }
  if (bra_dim != bra.size()) {
    throw DimensionError("partial_inner: bra size does not match contracted factors");
  }

  Index rest_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (!contracted[f]) rest_dim *= dims[f];
  }
  StateVector out = StateVector::Zero(rest_dim);

  // Walk the full index in mixed radix, splitting digits into bra / rest parts.
  std::vector<Index> digit(dims.size(), 0);
  for (Index full = 0; full < ket.size(); ++full) {
    Index bi = 0;
    Index ri = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      if (contracted[f]) {
        bi = bi * dims[f] + digit[f];
      } else {
        ri = ri * dims[f] + digit[f];
      }
    }
    out(ri) += std::conj(bra(bi)) * ket(full);
    for (std::size_t f = dims.size(); f-- > 0;) {
      if (++digit[f] < dims[f]) break;
      digit[f] = 0;
    }
  }
  return out;
}

Complex expectation(const StateVector& psi, const ComplexMatrix& op) {
  if (op.rows() != psi.size() || op.cols() != psi.size()) {
    throw DimensionError("expectation: operator and state dimensions differ");
  }
  return psi.dot(op * psi);
}

Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  if (rho.rows() != rho.cols() || op.rows() != rho.rows() || op.cols() != rho.cols()) {
    throw DimensionError("expectation: operator and density dimensions differ");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-10) {
    throw ContractError("expectation: density matrix trace differs from 1");
  }
  return (rho * op).trace();
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("fidelity: state dimensions differ");
  }
  if (std::abs(a.norm() - 1.0) > 1e-8 || std::abs(b.norm() - 1.0) > 1e-8) {
    throw ContractError("fidelity: inputs must be normalized");
  }
  return std::min(1.0, std::norm(a.dot(b)));
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.cols() <= m.rows() ? ComplexMatrix(m.adjoint() * m)
                                                  : ComplexMatrix(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double commutator_defect_below_edge(const FockOperators& ops) {
  const ComplexMatrix comm = ops.annihilate * ops.create - ops.create * ops.annihilate;
  const Index d = ops.cutoff;
  return operator_norm(comm.topLeftCorner(d, d) - identity(d));
}

double commutator_defect_at_edge(const FockOperators& ops) {
  const ComplexMatrix comm = ops.annihilate * ops.create - ops.create * ops.annihilate;
  return comm(ops.cutoff, ops.cutoff).real() - 1.0;
}

}  // namespace tfd
