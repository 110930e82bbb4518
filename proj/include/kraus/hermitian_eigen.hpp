#pragma once

#include "kraus/linalg.hpp"

#include <numeric>
#include <vector>

namespace kraus {

template <typename Real>
struct HermitianEigen {
  RVector<Real> values;   // descending
  CMatrix<Real> vectors;  // columns, unitary
  int sweeps = 0;
};

struct JacobiOptions {
  double hermitian_tol = 1e-10;
  double convergence_tol = 1e-12;
  int max_sweeps = 100;
};

namespace detail {

template <typename Real>
Real off_diagonal_norm(const CMatrix<Real>& a) {
  Real s = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided rotation A <- G^H A G zeroing A(p,q), accumulated into V <- V G.
// G on the (p,q) plane is diag(1, e^{-i phi}) followed by the real rotation [[c, s], [-s, c]],
// where phi = arg A(p,q).
template <typename Real>
void rotate(CMatrix<Real>& a, CMatrix<Real>& v, Eigen::Index p, Eigen::Index q) {
  using C = std::complex<Real>;
  const C apq = a(p, q);
  const Real b = std::abs(apq);
  if (b == Real(0)) return;
  const C phase = apq / b;  // e^{i phi}
  const Real app = std::real(a(p, p));
  const Real aqq = std::real(a(q, q));

  const Real theta = (aqq - app) / (Real(2) * b);
  const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
  const Real c = Real(1) / std::sqrt(t * t + Real(1));
  const Real s = t * c;

  const C gpp = c, gpq = s, gqp = -s * std::conj(phase), gqq = c * std::conj(phase);

  // A <- A G (columns p, q)
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const C akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // A <- G^H A (rows p, q)
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const C apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = C(0);
  a(q, p) = C(0);
  a(p, p) = C(std::real(a(p, p)), 0);
  a(q, q) = C(std::real(a(q, q)), 0);

  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const C vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace detail

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Converged once the off-diagonal Frobenius norm drops below
/// `convergence_tol * ||a||_F`. Eigenvalues come back sorted descending with
/// matching eigenvector columns. Throws DomainError when `a` is not Hermitian
/// within `hermitian_tol * max(1, ||a||_F)` and NumericalError when the sweep
/// cap is reached.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> hermitian_eigen(const Eigen::MatrixBase<Derived>& input,
                                                             const JacobiOptions& opts = {}) {
  using Real = typename Derived::RealScalar;
  require_square(input, "hermitian_eigen");
  require_finite(input, "hermitian_eigen");
  const Real deviation = hermitian_deviation(input);
  if (deviation > scaled_tol(input, Real(opts.hermitian_tol)))
    throw DomainError("hermitian_eigen: matrix is not Hermitian (max |A - A^H| = " +
                      std::to_string(deviation) + ")");

  const Eigen::Index n = input.rows();
  // Work on the Hermitian part so rounding-level asymmetry cannot bias the rotations.
  CMatrix<Real> a = (input + input.adjoint()) / Real(2);
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);
  const Real target = Real(opts.convergence_tol) * a.norm();

  int sweep = 0;
  while (detail::off_diagonal_norm(a) > target) {
    if (sweep == opts.max_sweeps)
      throw NumericalError("hermitian_eigen: no convergence after " + std::to_string(opts.max_sweeps) +
                           " sweeps");
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) detail::rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::real(a(x, x)) > std::real(a(y, y));
  });

  HermitianEigen<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto src = order[static_cast<std::size_t>(j)];
    out.values(j) = std::real(a(src, src));
    out.vectors.col(j) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace kraus
