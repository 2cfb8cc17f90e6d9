#include <cmath>

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/spin_gibbs.hpp"

using namespace tfd;

namespace {

// e^{−βω Ŝ₀}/Z with Ŝ₀ = diag(½, −½), through the matrix exponential.
ComplexMatrix gibbs_by_expm(double x) {
  Eigen::Matrix2d s0;
  s0 << 0.5, 0.0, 0.0, -0.5;
  const Eigen::Matrix2d e = (-x * s0).exp();
  return (e / e.trace()).cast<Complex>();
}

}  // namespace

TEST_SUITE("spin_gibbs") {

TEST_CASE("Gibbs state agrees with the matrix exponential") {
  for (double x : {0.0, 0.5, 1.0, 3.0, 10.0, -2.0}) {
    const SpinGibbs s = spin_gibbs(x);
    CHECK(oracle::max_abs(s.rho - gibbs_by_expm(x)) < 1e-15);
    CHECK(s.partition == doctest::Approx(2.0 * std::cosh(0.5 * x)));
  }
  CHECK(spin_gibbs(1000.0).rho(1, 1).real() == 1.0);
  CHECK_THROWS_AS(spin_gibbs(INFINITY), DomainError);
}

TEST_CASE("Hadamard transform of the Gibbs state") {
  for (double x : {0.0, 1.0, 10.0}) {
    const SpinGibbs s = spin_gibbs(x);
    const ComplexMatrix h = hadamard_transform(s);
    CHECK(std::abs(h(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(h(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(h(0, 1) + 0.5 * std::tanh(0.5 * x)) < 1e-12);
    CHECK(std::abs(h(1, 0) - h(0, 1)) == 0.0);
    CHECK(verify_gibbs_reversibility(s) < 1e-14);
  }
  SUBCASE("frozen off-diagonal magnitudes") {
    CHECK(std::abs(hadamard_transform(spin_gibbs(1.0))(0, 1)) ==
          doctest::Approx(0.231058578630004879).epsilon(1e-14));
    CHECK(std::abs(hadamard_transform(spin_gibbs(10.0))(0, 1)) ==
          doctest::Approx(0.499954602131297566).epsilon(1e-14));
    CHECK(hadamard_transform(spin_gibbs(0.0))(0, 1) == 0.0);
  }
}

TEST_CASE("printed sum differs from conjugation only in the off-diagonal sign") {
  for (double x : {0.3, 1.0, 10.0}) {
    const SpinGibbs s = spin_gibbs(x);
    const ComplexMatrix printed = hadamard_printed_form(s);
    const ComplexMatrix direct = hadamard_transform(s);
    CHECK(std::abs(printed(0, 0) - direct(0, 0)) < 1e-15);
    CHECK(std::abs(printed(1, 1) - direct(1, 1)) < 1e-15);
    CHECK(std::abs(printed(0, 1) + direct(0, 1)) < 1e-15);
  }
}

}  // TEST_SUITE
