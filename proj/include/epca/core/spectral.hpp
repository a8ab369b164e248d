#ifndef EPCA_CORE_SPECTRAL_HPP
#define EPCA_CORE_SPECTRAL_HPP

#include "epca/core/types.hpp"

#include <Eigen/Core>

namespace epca {

/**
 * Eigen-decomposition of a symmetric matrix.
 *
 * Eigenvalues are sorted in descending order; column i of `eigenvectors`
 * belongs to eigenvalue i. Signs are fixed so that the entry of largest
 * magnitude in each eigenvector is non-negative (first such index on ties).
 */
struct SpectralDecomposition
{
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

SpectralDecomposition spectral_decompose(const SymmetricMatrix& a);

/// Flip `v` so that its largest-magnitude entry (lowest index on ties) is non-negative.
void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v);

} // namespace epca

#endif
