#include "kraus/channels.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kraus;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexMatrix upper2(double x) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = x;
  return m;
}

double action_gap(const KrausChannel& a, const KrausChannel& b, int states, Rng& rng) {
  double gap = 0;
  for (int s = 0; s < states; ++s) {
    const auto rho = random_density_matrix(a.d_s(), rng);
    gap = std::max(gap, max_abs(apply(a, rho).matrix() - apply(b, rho).matrix()));
  }
  return gap;
}

JointUnitary random_joint(Eigen::Index ds, Eigen::Index da, Rng& rng) {
  return JointUnitary(random_unitary(ds * da, rng), ds, da);
}

}  // namespace

TEST_CASE("JointUnitary and KrausChannel invariants") {
  CHECK_THROWS_AS(JointUnitary(ComplexMatrix::Identity(4, 4), 2, 3), DimensionError);
  ComplexMatrix almost = ComplexMatrix::Identity(4, 4);
  almost(0, 0) = 1.001;
  CHECK_THROWS_AS(JointUnitary(almost, 2, 2), DomainError);

  CHECK_THROWS_AS(KrausChannel(2, {diag2(1, std::sqrt(0.5))}), DomainError);
  CHECK_THROWS_AS(KrausChannel(2, {ComplexMatrix::Identity(3, 3)}), DimensionError);
  CHECK_THROWS_AS(KrausChannel(2, {}), DimensionError);
  CHECK_NOTHROW(KrausChannel::unchecked(2, {diag2(1, std::sqrt(0.5))}));
}

TEST_CASE("extract_kraus") {
  SUBCASE("amplitude damping at p = 0.36") {
    const auto ch = extract_kraus(caa_unitary(0.36), 0);
    REQUIRE(ch.size() == 2);
    CHECK(max_abs(ch[0] - diag2(1, 0.8)) < 1e-15);
    CHECK(max_abs(ch[1] - upper2(0.6)) < 1e-15);
  }
  SUBCASE("no interaction") {
    const auto ch = extract_kraus(caa_unitary(0), 0);
    REQUIRE(ch.size() == 2);
    CHECK(ch[0] == ComplexMatrix::Identity(2, 2));
    CHECK(ch[1] == ComplexMatrix::Zero(2, 2));
  }
  SUBCASE("product unitary acts as conjugation by the system factor") {
    Rng rng(31);
    const ComplexMatrix us = random_unitary(2, rng), ua = random_unitary(3, rng);
    const auto ch = extract_kraus(JointUnitary(kron(us, ua), 2, 3), 0);
    for (int s = 0; s < 10; ++s) {
      const auto rho = random_density_matrix(2, rng);
      CHECK(max_abs(apply(ch, rho).matrix() - us * rho.matrix() * us.adjoint()) < 1e-12);
    }
  }
  SUBCASE("index formula against the oracle dilation, every env_init") {
    Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
      const Eigen::Index ds = 2 + trial % 2, da = 2 + trial % 3;
      const auto u = random_joint(ds, da, rng);
      const auto rho = random_density_matrix(ds, rng);
      for (Eigen::Index e = 0; e < da; ++e) {
        const auto expected = oracle::dilation(oracle::from_eigen(u.matrix()), oracle::from_eigen(rho.matrix()),
                                               static_cast<std::size_t>(da), static_cast<std::size_t>(e));
        CHECK(oracle::max_diff(expected, apply(extract_kraus(u, e), rho).matrix()) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(extract_kraus(caa_unitary(0.5), 2), DimensionError);
  CHECK_THROWS_AS(extract_kraus(caa_unitary(0.5), -1), DimensionError);
}

TEST_CASE("apply") {
  Rng rng(33);
  const KrausChannel id(3, {ComplexMatrix::Identity(3, 3)});
  const auto rho = random_density_matrix(3, rng);
  CHECK(apply(id, rho).matrix() == rho.matrix());
  CHECK_THROWS_AS(apply(id, random_density_matrix(2, rng)), DimensionError);

  for (double p : {0.0, 0.2, 0.75, 1.0}) {
    const BlochVector r{0.3, -0.5, 0.4};
    const double s = std::sqrt(1 - p);
    const auto out = to_bloch(apply(amplitude_damping(p), from_bloch(r)));
    CHECK(out.r1 == doctest::Approx(r.r1 * s).epsilon(1e-14));
    CHECK(out.r2 == doctest::Approx(r.r2 * s).epsilon(1e-14));
    CHECK(out.r3 == doctest::Approx(p + r.r3 * (1 - p)).epsilon(1e-14));
  }

  SUBCASE("linearity in rho") {
    for (int trial = 0; trial < 50; ++trial) {
      const auto ch = extract_kraus(random_joint(2, 3, rng), 0);
      const auto r1 = random_density_matrix(2, rng), r2 = random_density_matrix(2, rng);
      const double alpha = std::uniform_real_distribution<double>(0, 1)(rng);
      const DensityMatrix mix(alpha * r1.matrix() + (1 - alpha) * r2.matrix());
      const ComplexMatrix lhs = apply(ch, mix).matrix();
      const ComplexMatrix rhs = alpha * apply(ch, r1).matrix() + (1 - alpha) * apply(ch, r2).matrix();
      CHECK(max_abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("apply_via_dilation") {
  Rng rng(34);
  const auto rho = random_density_matrix(2, rng);
  CHECK(max_abs(apply_via_dilation(JointUnitary(ComplexMatrix::Identity(6, 6), 2, 3), rho, 1).matrix() -
                rho.matrix()) < 1e-15);

  const auto excited = pure_state(StateVector::basis(2, 1));
  CHECK(max_abs(apply_via_dilation(caa_unitary(0.75), excited, 0).matrix() - diag2(0.75, 0.25)) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_joint(2, 3, rng);
    const auto r = random_density_matrix(2, rng);
    CHECK(max_abs(apply_via_dilation(u, r, 0).matrix() - apply(extract_kraus(u, 0), r).matrix()) < 1e-10);
  }
  CHECK_THROWS_AS(apply_via_dilation(caa_unitary(0.5), rho, 5), DimensionError);
  CHECK_THROWS_AS(apply_via_dilation(caa_unitary(0.5), random_density_matrix(3, rng), 0), DimensionError);
}

TEST_CASE("caa_unitary") {
  CHECK(caa_unitary(0).matrix() == ComplexMatrix::Identity(4, 4));
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) CHECK(is_unitary(caa_unitary(p).matrix(), 1e-12));

  // Full decay: |S0E0> -> |S0E0>, |S1E0> -> |S0E1>.
  const ComplexMatrix u1 = caa_unitary(1).matrix();
  CHECK(u1.col(0) == ComplexMatrix::Identity(4, 4).col(0));
  CHECK(u1.col(2) == ComplexMatrix::Identity(4, 4).col(1));

  const auto ch = extract_kraus(caa_unitary(0.5), 0);
  CHECK(max_abs(ch[0] - diag2(1, std::sqrt(0.5))) < 1e-15);
  CHECK(max_abs(ch[1] - upper2(std::sqrt(0.5))) < 1e-15);

  CHECK_THROWS_AS(caa_unitary(-0.1), DomainError);
  CHECK_THROWS_AS(caa_unitary(1.5), DomainError);
}

TEST_CASE("amplitude_damping") {
  const auto ch0 = amplitude_damping(0);
  REQUIRE(ch0.size() == 1);
  CHECK(ch0[0] == ComplexMatrix::Identity(2, 2));

  const auto ch = amplitude_damping(0.36);
  REQUIRE(ch.size() == 2);
  CHECK(max_abs(ch[0] - diag2(1, 0.8)) < 1e-15);
  CHECK(max_abs(ch[1] - upper2(0.6)) < 1e-15);

  const auto ch1 = amplitude_damping(1);
  REQUIRE(ch1.size() == 2);
  CHECK(ch1[0] == diag2(1, 0));
  CHECK(ch1[1] == upper2(1));

  for (double p : {0.0, 0.3, 0.64, 1.0}) {
    const auto extracted = drop_null_operators(extract_kraus(caa_unitary(p), 0));
    const auto built = amplitude_damping(p);
    REQUIRE(extracted.size() == built.size());
    for (std::size_t l = 0; l < built.size(); ++l) CHECK(max_abs(extracted[l] - built[l]) < 1e-12);
  }
  CHECK_THROWS_AS(amplitude_damping(1.01), DomainError);
}

TEST_CASE("remix") {
  Rng rng(35);
  const auto ad = amplitude_damping(0.5);
  CHECK(remix(ad, ComplexMatrix::Identity(2, 2))[1] == ad[1]);

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const auto mixed = remix(ad, h);
  CHECK(max_abs(mixed[0] - ad[0]) > 0.1);
  CHECK(action_gap(ad, mixed, 100, rng) < 1e-10);

  CHECK_THROWS_AS(remix(ad, ComplexMatrix::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(remix(ad, 2.0 * ComplexMatrix::Identity(2, 2)), DomainError);

  SUBCASE("equals extraction after an environment rotation") {
    for (int trial = 0; trial < 30; ++trial) {
      const Eigen::Index ds = 2 + trial % 2, da = 2 + trial % 3;
      const auto u = random_joint(ds, da, rng);
      const ComplexMatrix v = random_unitary(da, rng);
      const auto lhs = extract_kraus(compose_env_unitary(u, v), 0);
      const auto rhs = remix(extract_kraus(u, 0), v);
      for (std::size_t l = 0; l < lhs.size(); ++l) CHECK(max_abs(lhs[l] - rhs[l]) < 1e-12);
      CHECK(action_gap(extract_kraus(u, 0), rhs, 5, rng) < 1e-10);
    }
  }
}

TEST_CASE("compose_env_unitary") {
  Rng rng(36);
  const auto u = caa_unitary(0.3);
  CHECK(compose_env_unitary(u, ComplexMatrix::Identity(2, 2)).matrix() == u.matrix());

  // Swapping the environment basis swaps the Kraus labels.
  const auto swapped = extract_kraus(compose_env_unitary(u, pauli(1)), 0);
  const auto plain = extract_kraus(u, 0);
  CHECK(max_abs(swapped[0] - plain[1]) == 0.0);
  CHECK(max_abs(swapped[1] - plain[0]) == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const auto w = compose_env_unitary(random_joint(3, 4, rng), random_unitary(4, rng));
    CHECK(is_unitary(w.matrix(), 1e-10));
  }
  CHECK_THROWS_AS(compose_env_unitary(u, ComplexMatrix::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(compose_env_unitary(u, diag2(1, 2)), DomainError);
}

TEST_CASE("gram_matrix") {
  // Tr(K0^H K0) = 1 + 0.64, Tr(K1^H K1) = 0.36, Tr(K0^H K1) = conj(K0)(0,1) K1(0,1) = 0.
  const ComplexMatrix w = gram_matrix(amplitude_damping(0.36));
  CHECK(max_abs(w - diag2(1.64, 0.36)) < 1e-15);

  Rng rng(37);
  const ComplexMatrix us = random_unitary(3, rng);
  const ComplexMatrix w1 = gram_matrix(KrausChannel(3, {us}));
  CHECK(std::abs(w1(0, 0) - 3.0) < 1e-14);

  for (int trial = 0; trial < 20; ++trial) {
    const auto ch = extract_kraus(random_joint(2 + trial % 2, 3, rng), 0);
    const ComplexMatrix g = gram_matrix(ch);
    CHECK(hermitian_deviation(g) < 1e-14);
    CHECK(std::abs(g.trace() - static_cast<double>(ch.d_s())) < 1e-10);
    CHECK(hermitian_eigen(g).values.minCoeff() >= -1e-12);
  }
}

TEST_CASE("reduce") {
  Rng rng(38);
  const auto ad = amplitude_damping(0.5);
  const auto r_ad = reduce(ad);
  CHECK(r_ad.size() == 2);
  CHECK(action_gap(ad, r_ad, 20, rng) < 1e-10);

  const auto big = extract_kraus(random_joint(2, 6, rng), 0);
  REQUIRE(big.size() == 6);
  const auto small = reduce(big);
  CHECK(small.size() <= 4);
  CHECK(action_gap(big, small, 100, rng) < 1e-10);
  const ComplexMatrix g = gram_matrix(small);
  CHECK(max_abs(g - ComplexMatrix(g.diagonal().asDiagonal())) < 1e-10);

  const auto padded = KrausChannel(2, {ad[0], ComplexMatrix::Zero(2, 2), ad[1], ComplexMatrix::Zero(2, 2)});
  CHECK(reduce(padded).size() == 2);
  CHECK(drop_null_operators(padded).size() == 2);
}

TEST_CASE("extract_kraus_mixed_env") {
  Rng rng(39);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index ds = 2, da = 2 + trial % 2;
    const auto u = random_joint(ds, da, rng);
    const auto env = random_density_matrix(da, rng);
    const auto ch = extract_kraus_mixed_env(u, env);
    CHECK(ch.size() == static_cast<std::size_t>(da * da));
    const auto rho = random_density_matrix(ds, rng);
    CHECK(max_abs(apply(ch, rho).matrix() - apply_via_dilation(u, rho, env).matrix()) < 1e-10);
  }
  // A pure environment reproduces the plain extraction's action.
  const auto u = caa_unitary(0.4);
  const auto ch = extract_kraus_mixed_env(u, pure_state(StateVector::basis(2, 0)));
  CHECK(action_gap(ch, amplitude_damping(0.4), 20, rng) < 1e-12);
}

TEST_CASE("complete_to_unitary") {
  Rng rng(40);
  for (Eigen::Index n : {1, 2, 5}) {
    ComplexVector v = random_gaussian(n, 1, rng);
    v /= v.norm();
    const ComplexMatrix q = complete_to_unitary(v);
    CHECK(is_unitary(q, 1e-13));
    CHECK(max_abs(q.col(0) - v) < 1e-14);
  }
  ComplexVector e0 = ComplexVector::Zero(3);
  e0(0) = 1;
  CHECK(max_abs(complete_to_unitary(e0) - ComplexMatrix::Identity(3, 3)) < 1e-15);
}

TEST_CASE("verify") {
  const auto rep = verify(amplitude_damping(0.3), 100);
  CHECK(rep.completeness_residual <= 1e-12);
  CHECK(rep.trace_deviation_max <= 1e-12);
  CHECK(rep.min_output_eigenvalue >= -1e-12);
  CHECK(rep.gram_rank == 2);
  CHECK(rep.operator_count == 2);
  CHECK(rep.passed());

  const auto id = verify(KrausChannel(2, {ComplexMatrix::Identity(2, 2)}), 10);
  CHECK(id.completeness_residual == 0.0);
  CHECK(id.gram_rank == 1);
  CHECK(id.trace_deviation_max < 1e-15);

  const auto broken = verify(KrausChannel::unchecked(2, {diag2(1, std::sqrt(0.5))}), 10);
  CHECK(broken.completeness_residual == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(broken.passed());

  CHECK_THROWS_AS(verify(amplitude_damping(0.3), 0), DomainError);
}
