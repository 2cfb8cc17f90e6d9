#pragma once

// Dense numerical substrate: truncated Fock spaces, Kronecker products,
// partial traces and inner products.
//
// Ordering convention, used everywhere in the library: in a doubled mode the
// physical (non-tilde) factor comes first, H ⊗ H̃; for several parties the
// factors are laid out A ⊗ B ⊗ C. Index of |i⟩⊗|j⟩ is i·dim(B) + j.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tfd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Index kDefaultMaxDim = 4096;

/// Ladder and number operators on the Fock states |0⟩..|cutoff⟩.
///
/// annihilate|n⟩ = √n|n−1⟩ and number = create·annihilate exactly. The
/// canonical commutator [a, a†] equals the identity except in the last
/// row/column, where truncation leaves −cutoff instead of 1.
struct FockOperators {
  int cutoff = 0;
  ComplexMatrix annihilate;
  ComplexMatrix create;
  ComplexMatrix number;

  static FockOperators make(int cutoff);
  Index dim() const { return cutoff + 1; }
};

ComplexMatrix identity(Index dim);
StateVector basis_ket(Index dim, Index k);

/// |ψ⟩⟨ψ|
ComplexMatrix projector(const StateVector& psi);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim = kDefaultMaxDim);
StateVector tensor_product(const StateVector& a, const StateVector& b,
                           Index max_dim = kDefaultMaxDim);

/// Reduced density matrix on subsystem `keep`; `dims` lists all factor
/// dimensions in tensor order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const Index> dims,
                            std::size_t keep);

/// Contracts `bra` (living on the factors listed in `over`, in ascending
/// order) against `ket` on the full product space. The result lives on the
/// remaining factors in their original order: ⟨bra|_over |ket⟩.
StateVector partial_inner(const StateVector& bra, const StateVector& ket,
                          std::span<const Index> dims, std::span<const std::size_t> over);

/// ⟨ψ|O|ψ⟩ (no normalization by ⟨ψ|ψ⟩).
Complex expectation(const StateVector& psi, const ComplexMatrix& op);
/// Tr(ρO); requires Tr ρ = 1 within 1e-10.
Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& op);

/// |⟨a|b⟩|² for normalized a, b (|‖·‖−1| ≤ 1e-8, otherwise ContractError).
double fidelity(const StateVector& a, const StateVector& b);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

/// ‖[a, a†] − I‖ restricted to the block |0..cutoff−1⟩; zero up to rounding.
double commutator_defect_below_edge(const FockOperators& ops);
/// The edge entry of [a, a†] − I, which is −(cutoff+1) for every cutoff.
double commutator_defect_at_edge(const FockOperators& ops);

}  // namespace tfd
