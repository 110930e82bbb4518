#pragma once

#include "kraus/linalg.hpp"
#include "kraus/states.hpp"

#include <cstdint>
#include <random>

namespace kraus {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. standard complex normal entries (real and imaginary parts N(0, 1/2)).
ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's diagonal absorbed into Q.
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);

/// G G^H / Tr(G G^H) for Gaussian G; full rank with probability one.
DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng);

/// Uniform in the closed unit ball.
BlochVector random_bloch(Rng& rng);

}  // namespace kraus
