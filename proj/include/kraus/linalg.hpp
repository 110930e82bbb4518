#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace kraus {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;

// Shape or index-range violation between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (not a state, not unitary, p > 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative routine failed or a numerical post-condition did not hold.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
std::string shape_of(const Eigen::MatrixBase<Derived>& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// tol * max(1, ||m||_F): the hybrid absolute/relative tolerance used throughout.
template <typename Derived>
typename Derived::RealScalar scaled_tol(const Eigen::MatrixBase<Derived>& m,
                                        typename Derived::RealScalar tol) {
  using std::max;
  return tol * max(typename Derived::RealScalar(1), m.norm());
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
    }
  return true;
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!all_finite(m)) throw DomainError(std::string(what) + ": matrix contains non-finite entries");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": expected a square matrix, got " + shape_of(m));
}

// Largest entry modulus; 0 for an empty matrix.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename Real>
CMatrix<Real> identity(Eigen::Index n) {
  return CMatrix<Real>::Identity(n, n);
}

template <typename DA, typename DB>
CMatrix<typename DA::RealScalar> matmul(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: cannot multiply " + shape_of(a) + " by " + shape_of(b));
  return a * b;
}

template <typename Derived>
CMatrix<typename Derived::RealScalar> dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

// System-major Kronecker product: entry (i*b.rows()+k, j*b.cols()+l) = a(i,j) * b(k,l).
template <typename DA, typename DB>
CMatrix<typename DA::RealScalar> kron(const Eigen::MatrixBase<DA>& a,
                                     const Eigen::MatrixBase<DB>& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  CMatrix<typename DA::RealScalar> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

template <typename Derived>
std::complex<typename Derived::RealScalar> trace(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "trace");
  return a.trace();
}

// Trace out the environment factor of a system-major composite operator,
// composite index = k * d_a + l for |S_k E_l>.
template <typename Derived>
CMatrix<typename Derived::RealScalar> partial_trace_env(const Eigen::MatrixBase<Derived>& m,
                                                        Eigen::Index d_s, Eigen::Index d_a) {
  if (d_s <= 0 || d_a <= 0) throw DimensionError("partial_trace_env: dimensions must be positive");
  if (m.rows() != d_s * d_a || m.cols() != d_s * d_a)
    throw DimensionError("partial_trace_env: matrix is " + shape_of(m) + " but d_s*d_a = " +
                         std::to_string(d_s * d_a));
  CMatrix<typename Derived::RealScalar> out = CMatrix<typename Derived::RealScalar>::Zero(d_s, d_s);
  for (Eigen::Index k = 0; k < d_s; ++k)
    for (Eigen::Index n = 0; n < d_s; ++n)
      for (Eigen::Index l = 0; l < d_a; ++l) out(k, n) += m(k * d_a + l, n * d_a + l);
  return out;
}

// Trace out the system (first) factor, leaving the d_a x d_a environment marginal.
template <typename Derived>
CMatrix<typename Derived::RealScalar> partial_trace_sys(const Eigen::MatrixBase<Derived>& m,
                                                        Eigen::Index d_s, Eigen::Index d_a) {
  if (d_s <= 0 || d_a <= 0) throw DimensionError("partial_trace_sys: dimensions must be positive");
  if (m.rows() != d_s * d_a || m.cols() != d_s * d_a)
    throw DimensionError("partial_trace_sys: matrix is " + shape_of(m) + " but d_s*d_a = " +
                         std::to_string(d_s * d_a));
  CMatrix<typename Derived::RealScalar> out = CMatrix<typename Derived::RealScalar>::Zero(d_a, d_a);
  for (Eigen::Index k = 0; k < d_s; ++k) out += m.block(k * d_a, k * d_a, d_a, d_a);
  return out;
}

template <typename Derived>
typename Derived::RealScalar hermitian_deviation(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "hermitian_deviation");
  return max_abs(a - a.adjoint());
}

template <typename Derived>
typename Derived::RealScalar unitarity_residual(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "unitarity_residual");
  using Real = typename Derived::RealScalar;
  return max_abs(a.adjoint() * a - CMatrix<Real>::Identity(a.rows(), a.cols()));
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a, typename Derived::RealScalar tol) {
  if (a.rows() != a.cols()) return false;
  return unitarity_residual(a) <= tol;
}

}  // namespace kraus
