#include "kraus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kraus {

namespace {

constexpr double kClosedFormTol = 1e-12;

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError(std::string(what) + ": p = " + std::to_string(p) + " outside [0, 1]");
}

TrajectoryPoint sample(const BlochVector& initial, const DensityMatrix& rho0, double t, double p) {
  const DensityMatrix rho = apply(amplitude_damping(p), rho0);
  const BlochVector r = to_bloch(rho);
  const BlochVector expected = evolve_bloch(initial, p);
  const double err = std::max({std::abs(r.r1 - expected.r1), std::abs(r.r2 - expected.r2),
                               std::abs(r.r3 - expected.r3)});
  if (err > kClosedFormTol)
    throw NumericalError("trajectory: Kraus path and closed form disagree by " + std::to_string(err) +
                         " at p = " + std::to_string(p));
  return {t, p, r, coherence_l1(rho)};
}

}  // namespace

double parametrized_time(double gamma, double t) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw DomainError("parametrized_time: gamma must be positive, got " + std::to_string(gamma));
  if (!(t >= 0.0)) throw DomainError("parametrized_time: t must be non-negative, got " + std::to_string(t));
  return std::min(-std::expm1(-gamma * t), kMaxFiniteTimeP);
}

double time_for_p(double gamma, double p) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw DomainError("time_for_p: gamma must be positive, got " + std::to_string(gamma));
  require_probability(p, "time_for_p");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-p) / gamma;
}

BlochVector evolve_bloch(const BlochVector& r, double p) {
  require_probability(p, "evolve_bloch");
  if (r.norm() > 1.0 + kStateTol) throw DomainError("evolve_bloch: |r| exceeds 1");
  const double s = std::sqrt(1.0 - p);
  return {r.r1 * s, r.r2 * s, p + r.r3 * (1.0 - p)};
}

double coherence_decay(double c0, double p) {
  require_probability(p, "coherence_decay");
  if (!(c0 >= 0.0)) throw DomainError("coherence_decay: c0 must be non-negative");
  return std::sqrt(1.0 - p) * c0;
}

std::vector<TrajectoryPoint> trajectory(const BlochVector& initial, const DecayParams& params) {
  if (params.samples < 2) throw DomainError("trajectory: need at least 2 samples");
  if (!(params.t_max >= 0.0) || !std::isfinite(params.t_max))
    throw DomainError("trajectory: t_max must be finite and non-negative");
  const DensityMatrix rho0 = from_bloch(initial);
  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(params.samples));
  for (int i = 0; i < params.samples; ++i) {
    const double t = params.t_max * i / (params.samples - 1);
    out.push_back(sample(initial, rho0, t, parametrized_time(params.gamma, t)));
  }
  return out;
}

std::vector<TrajectoryPoint> trajectory_p_grid(const BlochVector& initial, double gamma, int samples) {
  if (samples < 2) throw DomainError("trajectory_p_grid: need at least 2 samples");
  const DensityMatrix rho0 = from_bloch(initial);
  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double p = static_cast<double>(i) / (samples - 1);
    out.push_back(sample(initial, rho0, time_for_p(gamma, p), p));
  }
  return out;
}

double pauli_conjugation_check(double p, int k) {
  require_probability(p, "pauli_conjugation_check");
  const KrausChannel ch = amplitude_damping(p);
  const ComplexMatrix sigma = pauli(k);
  const ComplexMatrix lhs = apply_raw(ch, sigma);
  const ComplexMatrix rhs = std::pow(std::sqrt(1.0 - p), k == 3 ? 2 : 1) * sigma;
  const ComplexMatrix unital_lhs = apply_raw(ch, ComplexMatrix::Identity(2, 2));
  const ComplexMatrix unital_rhs = ComplexMatrix::Identity(2, 2) + p * pauli(3);
  return std::max(max_abs(lhs - rhs), max_abs(unital_lhs - unital_rhs));
}

}  // namespace kraus
