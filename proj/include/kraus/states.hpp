#pragma once

#include "kraus/hermitian_eigen.hpp"
#include "kraus/linalg.hpp"

#include <array>

namespace kraus {

inline constexpr double kStateTol = 1e-10;

/// Normalized pure state |psi> in the computational basis.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);

  /// Basis vector |index> of dimension `dim`.
  static StateVector basis(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix.
///
/// The constructor checks all three invariants (tolerance 1e-10) and throws
/// DomainError instead of repairing the input.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  ComplexMatrix m_;
  double min_eigenvalue_ = 0;
};

struct BlochVector {
  double r1 = 0, r2 = 0, r3 = 0;

  double norm() const;
  std::array<double, 3> components() const { return {r1, r2, r3}; }
};

/// Pauli matrices sigma_1..sigma_3 in the {|S_0>, |S_1>} basis; k outside 1..3 throws.
ComplexMatrix pauli(int k);

DensityMatrix pure_state(const StateVector& v);

DensityMatrix from_bloch(const BlochVector& r);
BlochVector to_bloch(const DensityMatrix& rho);

/// (r sin(theta) cos(phi), r sin(theta) sin(phi), r cos(theta)); angles in radians.
BlochVector from_spherical(double r, double theta, double phi);

/// Amplitudes cos(theta/2)|S_0> + e^{i phi} sin(theta/2)|S_1>.
StateVector qubit_state(double theta, double phi);

/// Schmidt purification into a d*d vector Σ_j sqrt(a_j) |a_j> ⊗ |j>.
///
/// Eigenpairs are taken in descending order and paired with computational
/// basis states of the auxiliary (second, fastest-varying) factor; eigenvalues
/// below 1e-14 are dropped. Tracing out the auxiliary factor recovers `rho`.
StateVector purify(const DensityMatrix& rho);

/// l1 coherence in the computational basis: sum of |rho(j,k)| over j != k.
double coherence_l1(const DensityMatrix& rho);
double coherence_l1(const ComplexMatrix& m);

}  // namespace kraus
