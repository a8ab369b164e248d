#ifndef EPCA_CORE_FRAME_HPP
#define EPCA_CORE_FRAME_HPP

#include "epca/core/types.hpp"

#include <Eigen/Core>

namespace epca {

/**
 * Orthonormal ambient vectors spanning the tangent space of an embedded
 * manifold at `base_point`. Columns of `vectors()` are the frame vectors, in
 * frame order.
 */
class TangentFrame
{
  public:
    TangentFrame() = default;

    /// Throws InputError unless the columns of `vectors` are orthonormal to 1e-10.
    TangentFrame(AmbientVector base_point, Eigen::MatrixXd vectors);

    const AmbientVector& base_point() const noexcept { return base_point_; }
    const Eigen::MatrixXd& vectors() const noexcept { return vectors_; }
    Index ambient_dim() const noexcept { return vectors_.rows(); }
    Index dim() const noexcept { return vectors_.cols(); }

    /// Orthogonal projector onto the span of the frame (N x N).
    Eigen::MatrixXd projector() const { return vectors_ * vectors_.transpose(); }

    /// Frame coordinates -> ambient vector.
    AmbientVector push_forward(const Eigen::VectorXd& coords) const;

  private:
    AmbientVector base_point_;
    Eigen::MatrixXd vectors_;
};

inline constexpr double kUnitTolerance = 1e-10;

/**
 * Deterministic orthonormal basis of the orthogonal complement of a unit
 * vector u in R^N, returned as the N x (N-1) matrix of basis columns.
 *
 * Uses the Householder reflection H that swaps u and the last canonical axis
 * e_N (reflection about the bisector hyperplane of u and e_N); the columns are
 * H e_1, ..., H e_{N-1}. When u == e_N the reflection is the identity.
 */
Eigen::MatrixXd complete_orthonormal_frame(const AmbientVector& u);

/// (e_1^T v, ..., e_m^T v) with respect to the frame order.
Eigen::VectorXd tangential_component(const AmbientVector& v, const TangentFrame& frame);

/**
 * General sample extrinsic covariance in frame coordinates.
 *
 * `embedded` holds one embedded sample j(x_r) per column, `differential` is
 * the N x N matrix of d P_j at the ambient sample mean. Returns
 * A S A^T with A = F^T dP and S the (1/n) sample covariance of the columns.
 */
SymmetricMatrix general_extrinsic_covariance(const Eigen::MatrixXd& embedded,
                                             const TangentFrame& frame,
                                             const Eigen::MatrixXd& differential);

} // namespace epca

#endif
