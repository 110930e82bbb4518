#pragma once

#include "kraus/channels.hpp"
#include "kraus/states.hpp"

#include <vector>

namespace kraus {

struct DecayParams {
  double gamma = 1.0;  // inverse time
  double t_max = 0.0;
  int samples = 2;
};

struct TrajectoryPoint {
  double t = 0;
  double p = 0;
  BlochVector bloch;
  double coherence = 0;
};

/// Largest p produced from a finite time.
inline constexpr double kMaxFiniteTimeP = 1.0 - 1e-15;

/// p(t) = 1 - exp(-gamma t), capped at kMaxFiniteTimeP.
double parametrized_time(double gamma, double t);

/// Inverse of parametrized_time; +inf at p = 1.
double time_for_p(double gamma, double p);

/// Closed-form amplitude-damping image (r1 sqrt(1-p), r2 sqrt(1-p), p + r3 (1-p)).
BlochVector evolve_bloch(const BlochVector& r, double p);

/// sqrt(1-p) * c0.
double coherence_decay(double c0, double p);

/// Uniform time grid over [0, t_max].
///
/// Each state goes through amplitude_damping(p) and the Kraus sum; the
/// closed-form evolve_bloch is used as a per-sample check (1e-12) and a
/// mismatch throws NumericalError.
std::vector<TrajectoryPoint> trajectory(const BlochVector& initial, const DecayParams& params);

/// Same record on a uniform p grid over [0, 1]; t = -ln(1-p)/gamma, infinite at p = 1.
std::vector<TrajectoryPoint> trajectory_p_grid(const BlochVector& initial, double gamma, int samples);

/// Max residual of Σ_j K_j sigma_k K_j^H = sqrt(1-p)^(1 + δ_3k) sigma_k and
/// Σ_j K_j K_j^H = I + p sigma_3 for the amplitude-damping pair.
double pauli_conjugation_check(double p, int k);

}  // namespace kraus
