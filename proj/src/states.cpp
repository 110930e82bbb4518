#include "kraus/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace kraus {

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("StateVector: empty amplitude vector");
  require_finite(amplitudes_, "StateVector");
  const double deviation = std::abs(amplitudes_.squaredNorm() - 1.0);
  if (deviation > kStateTol)
    throw DomainError("StateVector: not normalized (| |psi|^2 - 1 | = " + std::to_string(deviation) + ")");
}

StateVector StateVector::basis(Eigen::Index dim, Eigen::Index index) {
  if (dim <= 0 || index < 0 || index >= dim)
    throw DimensionError("StateVector::basis: index " + std::to_string(index) + " out of range for dimension " +
                         std::to_string(dim));
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  if (m_.rows() == 0) throw DimensionError("DensityMatrix: empty matrix");
  require_finite(m_, "DensityMatrix");

  const double herm = hermitian_deviation(m_);
  if (herm > kStateTol)
    throw DomainError("DensityMatrix: not Hermitian (max |rho - rho^H| = " + std::to_string(herm) + ")");
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > kStateTol)
    throw DomainError("DensityMatrix: trace is " + std::to_string(tr.real()) + (tr.imag() >= 0 ? "+" : "") +
                      std::to_string(tr.imag()) + "i, expected 1");
  min_eigenvalue_ = hermitian_eigen(m_).values.minCoeff();
  if (min_eigenvalue_ < -kStateTol)
    throw DomainError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                      std::to_string(min_eigenvalue_) + ")");
}

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

ComplexMatrix pauli(int k) {
  ComplexMatrix s(2, 2);
  const Complex i(0, 1);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw DomainError("pauli: index must be 1, 2 or 3, got " + std::to_string(k));
  }
  return s;
}

DensityMatrix pure_state(const StateVector& v) {
  const ComplexVector& a = v.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix from_bloch(const BlochVector& r) {
  for (double c : r.components())
    if (!std::isfinite(c)) throw DomainError("from_bloch: non-finite Bloch component");
  if (r.norm() > 1.0 + kStateTol)
    throw DomainError("from_bloch: |r| = " + std::to_string(r.norm()) + " exceeds 1, not a state");
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  m << 1.0 + r.r3, r.r1 - i * r.r2,
       r.r1 + i * r.r2, 1.0 - r.r3;
  return DensityMatrix(0.5 * m);
}

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("to_bloch: expected a 2x2 state, got dimension " + std::to_string(rho.dim()));
  const auto& m = rho.matrix();
  // Re Tr(rho sigma_j) written out entrywise.
  return {(m(0, 1) + m(1, 0)).real(), (m(1, 0) - m(0, 1)).imag(), (m(0, 0) - m(1, 1)).real()};
}

BlochVector from_spherical(double r, double theta, double phi) {
  if (!(r >= 0.0 && r <= 1.0 + 1e-12))
    throw DomainError("from_spherical: radius " + std::to_string(r) + " outside [0, 1]");
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw DomainError("from_spherical: non-finite angle");
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

StateVector qubit_state(double theta, double phi) {
  ComplexVector a(2);
  a << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
  return StateVector(std::move(a));
}

StateVector purify(const DensityMatrix& rho) {
  const Eigen::Index d = rho.dim();
  const auto eig = hermitian_eigen(rho.matrix());
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double lambda = eig.values(j);
    if (lambda < 1e-14) continue;
    // |a_j> ⊗ |j>: entry (k * d + j) = sqrt(lambda) * a_j(k)
    for (Eigen::Index k = 0; k < d; ++k) psi(k * d + j) = std::sqrt(lambda) * eig.vectors(k, j);
  }
  // Dropping sub-threshold eigenvalues loses at most d * 1e-14 of norm.
  psi /= psi.norm();
  return StateVector(std::move(psi));
}

double coherence_l1(const ComplexMatrix& m) {
  double c = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j) c += std::abs(m(i, j));
  return c;
}

double coherence_l1(const DensityMatrix& rho) { return coherence_l1(rho.matrix()); }

}  // namespace kraus
