#include "kraus/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace kraus {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError(std::string(what) + ": p = " + std::to_string(p) + " outside [0, 1]");
}

}  // namespace

JointUnitary::JointUnitary(ComplexMatrix m, Eigen::Index d_s, Eigen::Index d_a)
    : m_(std::move(m)), d_s_(d_s), d_a_(d_a) {
  if (d_s <= 0 || d_a <= 0) throw DimensionError("JointUnitary: dimensions must be positive");
  if (m_.rows() != d_s * d_a || m_.cols() != d_s * d_a)
    throw DimensionError("JointUnitary: matrix is " + shape_of(m_) + " but d_s*d_a = " +
                         std::to_string(d_s * d_a));
  require_finite(m_, "JointUnitary");
  const double residual = unitarity_residual(m_);
  if (residual > kUnitaryTol)
    throw DomainError("JointUnitary: matrix is not unitary (max |U^H U - I| = " + std::to_string(residual) + ")");
}

void KrausChannel::check_shapes(Eigen::Index d_s, const std::vector<ComplexMatrix>& ops) {
  if (d_s <= 0) throw DimensionError("KrausChannel: d_s must be positive");
  if (ops.empty()) throw DimensionError("KrausChannel: at least one operator is required");
  for (std::size_t l = 0; l < ops.size(); ++l) {
    if (ops[l].rows() != d_s || ops[l].cols() != d_s)
      throw DimensionError("KrausChannel: operator " + std::to_string(l) + " is " + shape_of(ops[l]) +
                           ", expected " + std::to_string(d_s) + "x" + std::to_string(d_s));
    require_finite(ops[l], "KrausChannel");
  }
}

KrausChannel::KrausChannel(Eigen::Index d_s, std::vector<ComplexMatrix> operators)
    : d_s_(d_s), ops_(std::move(operators)) {
  check_shapes(d_s_, ops_);
  const double residual = completeness_residual(d_s_, ops_);
  if (residual > kCompletenessTol)
    throw DomainError("KrausChannel: completeness violated (max |Σ K^H K - I| = " + std::to_string(residual) + ")");
}

KrausChannel KrausChannel::unchecked(Eigen::Index d_s, std::vector<ComplexMatrix> operators) {
  check_shapes(d_s, operators);
  KrausChannel ch;
  ch.d_s_ = d_s;
  ch.ops_ = std::move(operators);
  return ch;
}

bool ChannelReport::passed(double tol) const {
  return completeness_residual <= tol && trace_deviation_max <= tol && hermiticity_deviation_max <= tol &&
         min_output_eigenvalue >= -tol;
}

double completeness_residual(Eigen::Index d_s, const std::vector<ComplexMatrix>& operators) {
  ComplexMatrix sum = ComplexMatrix::Zero(d_s, d_s);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(d_s, d_s));
}

ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& m) {
  if (m.rows() != ch.d_s() || m.cols() != ch.d_s())
    throw DimensionError("apply: state is " + shape_of(m) + " but channel acts on dimension " +
                         std::to_string(ch.d_s()));
  ComplexMatrix out = ComplexMatrix::Zero(ch.d_s(), ch.d_s());
  for (const auto& k : ch.operators()) out.noalias() += k * m * k.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(ch, rho.matrix()));
}

DensityMatrix apply_via_dilation(const JointUnitary& u, const DensityMatrix& rho, Eigen::Index env_init) {
  if (env_init < 0 || env_init >= u.d_a())
    throw DimensionError("apply_via_dilation: env_init " + std::to_string(env_init) + " out of range [0, " +
                         std::to_string(u.d_a()) + ")");
  return apply_via_dilation(u, rho, pure_state(StateVector::basis(u.d_a(), env_init)));
}

DensityMatrix apply_via_dilation(const JointUnitary& u, const DensityMatrix& rho, const DensityMatrix& env) {
  if (rho.dim() != u.d_s())
    throw DimensionError("apply_via_dilation: state dimension " + std::to_string(rho.dim()) +
                         " does not match d_s = " + std::to_string(u.d_s()));
  if (env.dim() != u.d_a())
    throw DimensionError("apply_via_dilation: environment dimension " + std::to_string(env.dim()) +
                         " does not match d_a = " + std::to_string(u.d_a()));
  const ComplexMatrix joint = u.matrix() * kron(rho.matrix(), env.matrix()) * u.matrix().adjoint();
  return DensityMatrix(partial_trace_env(joint, u.d_s(), u.d_a()));
}

KrausChannel extract_kraus(const JointUnitary& u, Eigen::Index env_init) {
  const Eigen::Index d_s = u.d_s(), d_a = u.d_a();
  if (env_init < 0 || env_init >= d_a)
    throw DimensionError("extract_kraus: env_init " + std::to_string(env_init) + " out of range [0, " +
                         std::to_string(d_a) + ")");
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d_a));
  for (Eigen::Index l = 0; l < d_a; ++l) {
    ComplexMatrix k(d_s, d_s);
    for (Eigen::Index row = 0; row < d_s; ++row)
      for (Eigen::Index col = 0; col < d_s; ++col) k(row, col) = u.matrix()(row * d_a + l, col * d_a + env_init);
    ops.push_back(std::move(k));
  }
  const double residual = completeness_residual(d_s, ops);
  if (residual > kCompletenessTol)
    throw NumericalError("extract_kraus: extracted set violates completeness (residual " + std::to_string(residual) +
                         ")");
  return KrausChannel(d_s, std::move(ops));
}

ComplexMatrix complete_to_unitary(const ComplexVector& v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw DimensionError("complete_to_unitary: empty vector");
  if (std::abs(v.norm() - 1.0) > kStateTol) throw DomainError("complete_to_unitary: vector is not normalized");
  // Reflection H with H v = alpha e0, |alpha| = 1; then Q = H diag(alpha, 1, ...) has Q e0 = v.
  const Complex alpha = std::abs(v(0)) > 0 ? -v(0) / std::abs(v(0)) : Complex(-1.0);
  ComplexVector w = v;
  w(0) -= alpha;
  ComplexMatrix q = ComplexMatrix::Identity(n, n);
  const double wn = w.squaredNorm();
  if (wn > 0) q -= (2.0 / wn) * (w * w.adjoint());
  q.col(0) *= alpha;
  return q;
}

KrausChannel extract_kraus_mixed_env(const JointUnitary& u, const DensityMatrix& rho_env) {
  const Eigen::Index d_s = u.d_s(), d_a = u.d_a();
  if (rho_env.dim() != d_a)
    throw DimensionError("extract_kraus_mixed_env: environment state has dimension " +
                         std::to_string(rho_env.dim()) + ", expected " + std::to_string(d_a));
  const StateVector purified = purify(rho_env);
  const ComplexMatrix prep = complete_to_unitary(purified.amplitudes());
  const ComplexMatrix enlarged =
      kron(u.matrix(), identity<double>(d_a)) * kron(identity<double>(d_s), prep);
  return extract_kraus(JointUnitary(enlarged, d_s, d_a * d_a), 0);
}

JointUnitary caa_unitary(double p) {
  require_probability(p, "caa_unitary");
  const double a = std::sqrt(1.0 - p), b = std::sqrt(p);
  // Columns in order |S0E0>, |S0E1>, |S1E0>, |S1E1> (index k*2 + l).
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = a;
  m(2, 1) = -b;
  m(2, 2) = a;
  m(1, 2) = b;
  m(3, 3) = 1.0;
  return JointUnitary(std::move(m), 2, 2);
}

KrausChannel amplitude_damping(double p) {
  require_probability(p, "amplitude_damping");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k1(0, 1) = std::sqrt(p);
  return drop_null_operators(KrausChannel(2, {std::move(k0), std::move(k1)}));
}

KrausChannel remix(const KrausChannel& ch, const ComplexMatrix& v) {
  const auto n = static_cast<Eigen::Index>(ch.size());
  if (v.rows() != n || v.cols() != n)
    throw DimensionError("remix: mixing matrix is " + shape_of(v) + " but the channel has " + std::to_string(n) +
                         " operators");
  require_finite(v, "remix");
  const double residual = unitarity_residual(v);
  if (residual > kUnitaryTol)
    throw DomainError("remix: mixing matrix is not unitary (max |V^H V - I| = " + std::to_string(residual) + ")");
  std::vector<ComplexMatrix> out;
  out.reserve(ch.size());
  for (Eigen::Index l = 0; l < n; ++l) {
    ComplexMatrix k = ComplexMatrix::Zero(ch.d_s(), ch.d_s());
    for (Eigen::Index m = 0; m < n; ++m) k += v(l, m) * ch[static_cast<std::size_t>(m)];
    out.push_back(std::move(k));
  }
  return KrausChannel(ch.d_s(), std::move(out));
}

JointUnitary compose_env_unitary(const JointUnitary& u, const ComplexMatrix& v) {
  if (v.rows() != u.d_a() || v.cols() != u.d_a())
    throw DimensionError("compose_env_unitary: environment unitary is " + shape_of(v) + ", expected side " +
                         std::to_string(u.d_a()));
  require_finite(v, "compose_env_unitary");
  const double residual = unitarity_residual(v);
  if (residual > kUnitaryTol)
    throw DomainError("compose_env_unitary: V is not unitary (max |V^H V - I| = " + std::to_string(residual) + ")");
  return JointUnitary(kron(identity<double>(u.d_s()), v) * u.matrix(), u.d_s(), u.d_a());
}

ComplexMatrix gram_matrix(const KrausChannel& ch) {
  const auto n = static_cast<Eigen::Index>(ch.size());
  ComplexMatrix w(n, n);
  for (Eigen::Index l = 0; l < n; ++l)
    for (Eigen::Index m = 0; m < n; ++m)
      // Tr(A^H B) = Σ conj(A_ij) B_ij
      w(l, m) = ch[static_cast<std::size_t>(l)].conjugate().cwiseProduct(ch[static_cast<std::size_t>(m)]).sum();
  return w;
}

std::size_t gram_rank(const KrausChannel& ch, double tol) {
  const auto eig = hermitian_eigen(gram_matrix(ch));
  return static_cast<std::size_t>((eig.values.array() > tol).count());
}

KrausChannel reduce(const KrausChannel& ch) {
  const auto eig = hermitian_eigen(gram_matrix(ch));
  const auto n = static_cast<Eigen::Index>(ch.size());
  // W = E diag(w) E^H; K'_j = Σ_m E(m, j) K_m gives Tr(K'_i^H K'_j) = w_j δ_ij.
  std::vector<ComplexMatrix> out;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (eig.values(j) < kNullOperatorTol) continue;
    ComplexMatrix k = ComplexMatrix::Zero(ch.d_s(), ch.d_s());
    for (Eigen::Index m = 0; m < n; ++m) k += eig.vectors(m, j) * ch[static_cast<std::size_t>(m)];
    if (k.squaredNorm() < kNullOperatorTol) continue;
    out.push_back(std::move(k));
  }
  if (out.empty()) throw NumericalError("reduce: every operator vanished");
  return KrausChannel(ch.d_s(), std::move(out));
}

KrausChannel drop_null_operators(const KrausChannel& ch) {
  std::vector<ComplexMatrix> kept;
  for (const auto& k : ch.operators())
    if (k.squaredNorm() >= kNullOperatorTol) kept.push_back(k);
  if (kept.empty()) throw DomainError("drop_null_operators: every operator is null");
  return KrausChannel(ch.d_s(), std::move(kept));
}

ChannelReport verify(const KrausChannel& ch, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify: samples must be at least 1");
  ChannelReport report;
  report.completeness_residual = completeness_residual(ch.d_s(), ch.operators());
  report.operator_count = ch.size();
  report.gram_rank = gram_rank(ch);
  report.min_output_eigenvalue = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_density_matrix(ch.d_s(), rng);
    const ComplexMatrix out = apply_raw(ch, rho.matrix());
    report.trace_deviation_max = std::max(report.trace_deviation_max, std::abs(out.trace() - 1.0));
    report.hermiticity_deviation_max = std::max(report.hermiticity_deviation_max, hermitian_deviation(out));
    const ComplexMatrix herm = (out + out.adjoint()) / 2.0;
    report.min_output_eigenvalue = std::min(report.min_output_eigenvalue, hermitian_eigen(herm).values.minCoeff());
  }
  return report;
}

}  // namespace kraus
