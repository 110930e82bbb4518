#pragma once

#include "kraus/linalg.hpp"
#include "kraus/random.hpp"
#include "kraus/states.hpp"

#include <cstdint>
#include <vector>

namespace kraus {

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
/// Operators with squared Frobenius norm below this are treated as null.
inline constexpr double kNullOperatorTol = 1e-12;

/// Unitary on system ⊗ environment, composite index k * d_a + l for |S_k E_l>.
class JointUnitary {
 public:
  /// Throws DimensionError on a size mismatch and DomainError (with the residual) if not unitary.
  JointUnitary(ComplexMatrix m, Eigen::Index d_s, Eigen::Index d_a);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index d_s() const { return d_s_; }
  Eigen::Index d_a() const { return d_a_; }

 private:
  ComplexMatrix m_;
  Eigen::Index d_s_, d_a_;
};

/// Ordered Kraus set {K_l} on a d_s-dimensional system.
class KrausChannel {
 public:
  /// Checks shapes, finiteness and completeness ||Σ K^H K - I||_max <= 1e-10.
  KrausChannel(Eigen::Index d_s, std::vector<ComplexMatrix> operators);

  /// Shape and finiteness checks only. For diagnosing sets that may violate
  /// completeness (see verify()); apply() on such a set usually throws.
  static KrausChannel unchecked(Eigen::Index d_s, std::vector<ComplexMatrix> operators);

  Eigen::Index d_s() const { return d_s_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  const ComplexMatrix& operator[](std::size_t l) const { return ops_[l]; }

 private:
  KrausChannel() = default;
  static void check_shapes(Eigen::Index d_s, const std::vector<ComplexMatrix>& ops);

  Eigen::Index d_s_ = 0;
  std::vector<ComplexMatrix> ops_;
};

struct ChannelReport {
  double completeness_residual = 0;
  double trace_deviation_max = 0;
  double hermiticity_deviation_max = 0;
  double min_output_eigenvalue = 0;
  std::size_t operator_count = 0;
  std::size_t gram_rank = 0;

  /// completeness residual and every output check within 1e-10.
  bool passed(double tol = kCompletenessTol) const;
};

/// max entry of |Σ K^H K - I|.
double completeness_residual(Eigen::Index d_s, const std::vector<ComplexMatrix>& operators);

/// Σ_l K_l m K_l^H on a raw matrix, without state validation.
ComplexMatrix apply_raw(const KrausChannel& ch, const ComplexMatrix& m);

/// rho -> Σ_l K_l rho K_l^H.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Reference path: Tr_E[ U (rho ⊗ |E_e><E_e|) U^H ].
DensityMatrix apply_via_dilation(const JointUnitary& u, const DensityMatrix& rho, Eigen::Index env_init);

/// Tr_E[ U (rho ⊗ rho_env) U^H ] for a mixed environment state.
DensityMatrix apply_via_dilation(const JointUnitary& u, const DensityMatrix& rho, const DensityMatrix& env);

/// <S_k|K_l|S_m> = <S_k E_l| U |S_m E_e>, one operator per environment basis state.
///
/// All d_a operators are returned, null ones included, so that operator l
/// stays tied to environment state |E_l>. Completeness is re-checked
/// numerically and a failure raises NumericalError.
KrausChannel extract_kraus(const JointUnitary& u, Eigen::Index env_init = 0);

/// Mixed initial environment: purify rho_env into E ⊗ A, rotate the
/// purification onto the first basis state of the enlarged environment and
/// extract from (U ⊗ I_A)(I_S ⊗ W). Returns d_a * d_a operators indexed
/// l * d_a + a.
KrausChannel extract_kraus_mixed_env(const JointUnitary& u, const DensityMatrix& rho_env);

/// Amplitude-damping dilation on qubit ⊗ qubit-environment.
/// U|S0E0> = |S0E0>, U|S1E0> = sqrt(1-p)|S1E0> + sqrt(p)|S0E1>,
/// U|S0E1> = -sqrt(p)|S1E0> + sqrt(1-p)|S0E1>, U|S1E1> = |S1E1>.
JointUnitary caa_unitary(double p);

/// {[[1, 0], [0, sqrt(1-p)]], [[0, sqrt(p)], [0, 0]]} with null operators removed.
KrausChannel amplitude_damping(double p);

/// K'_l = Σ_n v(l, n) K_n for unitary v of side size().
KrausChannel remix(const KrausChannel& ch, const ComplexMatrix& v);

/// (I_S ⊗ v) U.
JointUnitary compose_env_unitary(const JointUnitary& u, const ComplexMatrix& v);

/// W(l, m) = Tr(K_l^H K_m).
ComplexMatrix gram_matrix(const KrausChannel& ch);

/// Number of Gram eigenvalues above `tol`.
std::size_t gram_rank(const KrausChannel& ch, double tol = 1e-10);

/// Orthogonalize through the Gram eigenbasis and keep the operators with
/// Tr(K^H K) >= 1e-12; at most d_s^2 survive.
KrausChannel reduce(const KrausChannel& ch);

/// Remove operators with squared Frobenius norm below kNullOperatorTol.
KrausChannel drop_null_operators(const KrausChannel& ch);

/// Completeness plus trace, Hermiticity and positivity of the outputs for
/// `samples` random inputs drawn with `seed`.
ChannelReport verify(const KrausChannel& ch, int samples, std::uint64_t seed = 0x5eed);

/// Unitary whose first column is the unit vector `v` (Householder completion).
ComplexMatrix complete_to_unitary(const ComplexVector& v);

}  // namespace kraus
