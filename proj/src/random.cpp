#include "kraus/random.hpp"

#include <cmath>

namespace kraus {

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  return (g + g.adjoint()) / 2.0;
}

DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = random_gaussian(d, d, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  // Exact Hermitian symmetry; the product above can be off by an ulp.
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(std::move(m));
}

BlochVector random_bloch(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    BlochVector r{u(rng), u(rng), u(rng)};
    if (r.norm() <= 1.0) return r;
  }
}

}  // namespace kraus
