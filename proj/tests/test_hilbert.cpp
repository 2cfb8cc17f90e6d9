#include <array>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/hilbert.hpp"

using namespace tfd;

namespace {

ComplexMatrix random_matrix(Index r, Index c, std::mt19937& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

StateVector random_state(Index d, std::mt19937& rng) {
  StateVector v = random_matrix(d, 1, rng).col(0);
  return v.normalized();
}

ComplexMatrix random_density(Index d, std::mt19937& rng) {
  const ComplexMatrix a = random_matrix(d, d, rng);
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("ladder operators match the loop construction") {
  for (int n : {1, 2, 5, 24}) {
    const auto ops = FockOperators::make(n);
    CHECK(ops.dim() == n + 1);
    CHECK(oracle::max_abs(ops.annihilate - oracle::annihilator(n)) == 0.0);
    CHECK(oracle::max_abs(ops.create - oracle::annihilator(n).adjoint()) == 0.0);
    CHECK(oracle::max_abs(ops.number - oracle::number(n)) < 1e-13);
  }
  CHECK_THROWS_AS(FockOperators::make(0), DomainError);
}

TEST_CASE("commutator defect sits only on the cutoff edge") {
  for (int n : {1, 3, 10, 30}) {
    const auto ops = FockOperators::make(n);
    CHECK(commutator_defect_below_edge(ops) < 1e-12);
    CHECK(commutator_defect_at_edge(ops) == doctest::Approx(-(n + 1)));
  }
}

TEST_CASE("annihilator lowers |3> to sqrt(3)|2>") {
  const auto ops = FockOperators::make(5);
  const StateVector out = ops.annihilate * basis_ket(6, 3);
  CHECK(std::abs(out(2) - std::sqrt(3.0)) < 1e-15);
  CHECK(out.norm() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("tensor product agrees with explicit index loops") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = random_matrix(3, 3, rng);
    const ComplexMatrix b = random_matrix(4, 4, rng);
    CHECK(oracle::max_abs(tensor_product(a, b) - oracle::kron(a, b)) < 1e-14);
    const StateVector x = random_state(3, rng);
    const StateVector y = random_state(5, rng);
    CHECK((tensor_product(x, y) - oracle::kron(x, y)).norm() < 1e-14);
  }
  SUBCASE("index convention |i>|j> -> i*dim(B)+j") {
    const StateVector v = tensor_product(basis_ket(3, 2), basis_ket(4, 1));
    CHECK(std::abs(v(2 * 4 + 1) - 1.0) < 1e-15);
  }
  SUBCASE("dimension cap") {
    CHECK_THROWS_AS(tensor_product(identity(65), identity(65)), DimensionError);
    CHECK_NOTHROW(tensor_product(identity(64), identity(64)));
    CHECK_NOTHROW(tensor_product(identity(65), identity(65), 65 * 65));
  }
}

TEST_CASE("partial trace of a product state recovers the factors") {
  std::mt19937 rng(11);
  const ComplexMatrix ra = random_density(3, rng);
  const ComplexMatrix rb = random_density(4, rng);
  const ComplexMatrix joint = tensor_product(ra, rb);
  const std::array<Index, 2> dims{3, 4};
  CHECK(oracle::max_abs(partial_trace(joint, dims, 0) - ra) < 1e-14);
  CHECK(oracle::max_abs(partial_trace(joint, dims, 1) - rb) < 1e-14);
  CHECK_THROWS_AS(partial_trace(joint, dims, 2), DimensionError);
  const std::array<Index, 2> wrong{3, 3};
  CHECK_THROWS_AS(partial_trace(joint, wrong, 0), DimensionError);
}

TEST_CASE("partial trace of entangled densities matches loops") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix rho = random_density(12, rng);
    const std::array<Index, 2> dims{3, 4};
    CHECK(oracle::max_abs(partial_trace(rho, dims, 0) - oracle::trace_second(rho, 3, 4)) < 1e-14);
    CHECK(oracle::max_abs(partial_trace(rho, dims, 1) - oracle::trace_first(rho, 3, 4)) < 1e-14);
  }
  SUBCASE("three factors: middle one") {
    const ComplexMatrix rho = random_density(24, rng);
    const std::array<Index, 3> dims{2, 3, 4};
    const ComplexMatrix kept = partial_trace(rho, dims, 1);
    ComplexMatrix ref = ComplexMatrix::Zero(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        for (Index a = 0; a < 2; ++a)
          for (Index c = 0; c < 4; ++c) ref(i, j) += rho(a * 12 + i * 4 + c, a * 12 + j * 4 + c);
    CHECK(oracle::max_abs(kept - ref) < 1e-14);
    CHECK(std::abs(kept.trace() - 1.0) < 1e-13);
  }
}

TEST_CASE("partial inner product contracts the listed factors") {
  std::mt19937 rng(13);
  const StateVector a = random_state(2, rng);
  const StateVector b = random_state(3, rng);
  const StateVector c = random_state(4, rng);
  const StateVector abc = tensor_product(tensor_product(a, b), c);
  const std::array<Index, 3> dims{2, 3, 4};

  const StateVector bra_ac = tensor_product(a, c);
  const std::array<std::size_t, 2> over_ac{0, 2};
  CHECK((partial_inner(bra_ac, abc, dims, over_ac) - b).norm() < 1e-14);

  const std::array<std::size_t, 1> over_b{1};
  const StateVector ac = partial_inner(b, abc, dims, over_b);
  CHECK((ac - tensor_product(a, c)).norm() < 1e-14);

  const std::array<std::size_t, 2> descending{2, 0};
  CHECK_THROWS_AS(partial_inner(bra_ac, abc, dims, descending), DimensionError);
}

TEST_CASE("expectation values and their contracts") {
  const auto ops = FockOperators::make(4);
  CHECK(std::abs(expectation(basis_ket(5, 3), ops.number) - 3.0) < 1e-15);
  ComplexMatrix rho = ComplexMatrix::Zero(5, 5);
  rho(1, 1) = 0.25;
  rho(2, 2) = 0.75;
  CHECK(std::abs(expectation(rho, ops.number) - 1.75) < 1e-15);
  CHECK_THROWS_AS(expectation(ComplexMatrix(2.0 * rho), ops.number), ContractError);
  CHECK_THROWS_AS(expectation(basis_ket(4, 0), ops.number), DimensionError);
}

TEST_CASE("fidelity") {
  std::mt19937 rng(14);
  const StateVector x = random_state(6, rng);
  CHECK(fidelity(x, x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(x, Complex(0.0, 1.0) * x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(basis_ket(3, 0), basis_ket(3, 1)) == 0.0);
  CHECK(fidelity(basis_ket(2, 0), StateVector((basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0))) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(fidelity(x, StateVector(2.0 * x)), ContractError);
  CHECK_THROWS_AS(fidelity(x, basis_ket(5, 0)), DimensionError);
}

TEST_CASE("operator norm and hermiticity") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 3.0;
  CHECK(operator_norm(m) == doctest::Approx(3.0));
  CHECK_FALSE(is_hermitian(m));
  CHECK(is_hermitian(ComplexMatrix(m + m.adjoint())));
}

}  // TEST_SUITE
