#include "kraus/linalg.hpp"
#include "kraus/random.hpp"
#include "kraus/states.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kraus;

namespace {

const Complex I(0, 1);

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("matmul") {
  Rng rng(1);
  const ComplexMatrix m = random_gaussian(2, 2, rng);
  CHECK(matmul(identity<double>(2), m) == m);
  CHECK(max_abs(matmul(pauli(1), pauli(1)) - identity<double>(2)) == 0.0);

  const ComplexMatrix a = random_gaussian(3, 4, rng), b = random_gaussian(4, 2, rng);
  const auto expected = oracle::matmul(oracle::from_eigen(a), oracle::from_eigen(b));
  CHECK(oracle::max_diff(expected, matmul(a, b)) < 1e-14);

  SUBCASE("shape mismatch names both shapes") {
    try {
      (void)matmul(a, a);
      FAIL("expected DimensionError");
    } catch (const DimensionError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("3x4") != std::string::npos);
    }
  }
}

TEST_CASE("dagger") {
  CHECK(dagger(pauli(2)) == pauli(2));
  CHECK(dagger(m2(0, 1, 0, 0)) == m2(0, 0, 1, 0));

  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_gaussian(3, 4, rng), b = random_gaussian(4, 3, rng);
    CHECK(dagger(dagger(a)) == a);
    CHECK(max_abs(dagger(matmul(a, b)) - matmul(dagger(b), dagger(a))) < 1e-13);
    CHECK(oracle::max_diff(oracle::dagger(oracle::from_eigen(a)), dagger(a)) == 0.0);
  }
}

TEST_CASE("kron") {
  CHECK(kron(identity<double>(2), identity<double>(2)) == identity<double>(4));

  // [[0, I], [I, 0]] by the index formula.
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  CHECK(kron(pauli(1), identity<double>(2)) == expected);

  Rng rng(3);
  for (Eigen::Index n : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix a = random_gaussian(n, n, rng), b = random_gaussian(n, n, rng),
                          c = random_gaussian(n, n, rng), d = random_gaussian(n, n, rng);
      CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-12);
    }
  }

  const ComplexMatrix a = random_gaussian(2, 3, rng), b = random_gaussian(3, 2, rng);
  CHECK(oracle::max_diff(oracle::kron(oracle::from_eigen(a), oracle::from_eigen(b)), kron(a, b)) == 0.0);
}

TEST_CASE("trace") {
  CHECK(trace(identity<double>(3)) == Complex(3));
  CHECK(trace(pauli(3)) == Complex(0));
  CHECK_THROWS_AS((void)trace(ComplexMatrix::Zero(2, 3)), DimensionError);

  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_gaussian(4, 4, rng), b = random_gaussian(4, 4, rng);
    CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-12);
  }
}

TEST_CASE("partial_trace_env") {
  CHECK(partial_trace_env(identity<double>(4), 2, 2) == 2.0 * identity<double>(2));

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1 / std::sqrt(2.0);
  CHECK(max_abs(partial_trace_env(bell * bell.adjoint(), 2, 2) - identity<double>(2) / 2.0) < 1e-15);

  CHECK_THROWS_AS((void)partial_trace_env(identity<double>(4), 2, 3), DimensionError);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index ds = 2 + trial % 2, da = 2 + trial % 3;
    const ComplexMatrix rho = random_density_matrix(ds, rng).matrix();
    const ComplexMatrix sigma = random_gaussian(da, da, rng);
    CHECK(max_abs(partial_trace_env(kron(rho, sigma), ds, da) - rho * trace(sigma)) < 1e-12);

    const ComplexMatrix a = random_gaussian(ds * da, ds * da, rng), b = random_gaussian(ds * da, ds * da, rng);
    const Complex alpha(0.3, -1.2), beta(-0.7, 0.4);
    CHECK(max_abs(partial_trace_env(alpha * a + beta * b, ds, da) -
                  (alpha * partial_trace_env(a, ds, da) + beta * partial_trace_env(b, ds, da))) < 1e-14);
    CHECK(std::abs(trace(partial_trace_env(a, ds, da)) - trace(a)) < 1e-12);
    CHECK(oracle::max_diff(oracle::partial_trace_env(oracle::from_eigen(a), static_cast<std::size_t>(ds),
                                                     static_cast<std::size_t>(da)),
                           partial_trace_env(a, ds, da)) < 1e-14);
  }
}

TEST_CASE("partial_trace_sys returns the environment marginal") {
  Rng rng(6);
  const ComplexMatrix rho = random_density_matrix(2, rng).matrix();
  const ComplexMatrix sigma = random_density_matrix(3, rng).matrix();
  CHECK(max_abs(partial_trace_sys(kron(rho, sigma), 2, 3) - sigma) < 1e-14);
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(identity<double>(4), 1e-12));
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = 0.8;
  CHECK_FALSE(is_unitary(k0, 1e-12));
  CHECK_FALSE(is_unitary(ComplexMatrix::Zero(2, 3), 1e-12));

  Rng rng(7);
  CHECK(is_unitary(random_unitary(5, rng), 1e-12));
}
