#ifndef EPCA_CORE_BACKEND_HPP
#define EPCA_CORE_BACKEND_HPP

#include "epca/core/frame.hpp"
#include "epca/core/types.hpp"

#include <Eigen/Core>

namespace epca {

/**
 * Embedding contract every manifold backend fulfills.
 *
 * Works purely in ambient coordinates: `project` is the nearest-point
 * projection P_j onto j(M), defined away from the focal set. Point-level
 * `embed` lives on the concrete backends since point types differ.
 *
 * Implementations are immutable and safe to share between threads.
 */
class EmbeddingBackend
{
  public:
    virtual ~EmbeddingBackend() = default;

    virtual Index ambient_dim() const = 0;
    virtual Index manifold_dim() const = 0;

    virtual bool is_focal(const AmbientVector& x) const = 0;

    /// P_j(x). Throws FocalPointError on focal input.
    virtual AmbientVector project(const AmbientVector& x) const = 0;

    /// Closed-form d_x P_j as an N x N matrix in the canonical basis.
    virtual Eigen::MatrixXd projection_differential(const AmbientVector& x) const = 0;

    /// Orthonormal frame of the tangent space of j(M) at an embedded point.
    virtual TangentFrame tangent_frame(const AmbientVector& embedded_point) const = 0;
};

} // namespace epca

#endif
