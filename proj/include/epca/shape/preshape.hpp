#ifndef EPCA_SHAPE_PRESHAPE_HPP
#define EPCA_SHAPE_PRESHAPE_HPP

#include "epca/core/types.hpp"
#include "epca/shape/contour.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace epca::shape {

inline constexpr double kPreShapeTolerance = 1e-10;

/**
 * Centered, unit-norm complex k-vector. It represents the shape class [z];
 * z and e^{i theta} z are the same shape.
 */
class PreShape
{
  public:
    PreShape() = default;

    /// Throws InputError unless sum(z) == 0 and ‖z‖ == 1 to kPreShapeTolerance.
    explicit PreShape(Eigen::VectorXcd z);

    /// Centers and normalizes `z`. Throws InputError when z is constant.
    static PreShape from_raw(const Eigen::VectorXcd& z);

    const Eigen::VectorXcd& z() const noexcept { return z_; }
    Index k() const noexcept { return z_.size(); }

  private:
    Eigen::VectorXcd z_;
};

/// Centers the contour at its centroid and scales to unit norm.
PreShape to_preshape(const Contour& c);

/// Rotates the representative so that its entry of largest modulus (lowest index on ties) is real positive.
PreShape phase_normalized(const PreShape& p);

/// ‖zz* - ww*‖_HS = sqrt(2 (1 - |<z, w>|^2)).
double shape_chord_distance(const PreShape& p, const PreShape& q);

/// Preshape coordinates as a planar configuration (x = Re, y = Im).
Contour preshape_contour(const PreShape& p);

/// Preshapes as columns of a k x n matrix. Throws InputError on empty or mixed-k input.
Eigen::MatrixXcd preshape_matrix(std::span<const PreShape> sample);

/**
 * Orthonormal basis (k x (k-1)) of the centered subspace {z : sum z = 0},
 * column j = (1, ..., 1, -j, 0, ..., 0) / sqrt(j (j + 1)) with j ones.
 */
Eigen::MatrixXd helmert_basis(Index k);

} // namespace epca::shape

#endif
