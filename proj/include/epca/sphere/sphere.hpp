#ifndef EPCA_SPHERE_SPHERE_HPP
#define EPCA_SPHERE_SPHERE_HPP

#include "epca/core/backend.hpp"
#include "epca/core/frame.hpp"
#include "epca/core/types.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace epca::sphere {

/// Ambient norms at or below this are treated as the sphere's focal point (the origin).
inline constexpr double kFocalEpsilon = 1e-12;

/// A point of S^d stored in R^{d+1}; |‖x‖ - 1| <= 1e-10.
class UnitVector
{
  public:
    UnitVector() = default;

    /// Throws InputError when `coords` is not unit length.
    explicit UnitVector(AmbientVector coords);

    const AmbientVector& coords() const noexcept { return coords_; }
    Index ambient_dim() const noexcept { return coords_.size(); }
    double operator[](Index i) const { return coords_[i]; }

  private:
    AmbientVector coords_;
};

using SphereSample = std::vector<UnitVector>;

/// Points as the columns of an N x n matrix. Throws InputError on empty or mixed-dimension samples.
Eigen::MatrixXd sample_matrix(std::span<const UnitVector> sample);

/// P_j(x) = x / ‖x‖. Throws FocalPointError when ‖x‖ <= kFocalEpsilon.
UnitVector sphere_project(const AmbientVector& x);

/// Ambient mean of the sample, summed pairwise in canonical order.
AmbientVector ambient_mean(std::span<const UnitVector> sample);

/// Projection of the ambient sample mean back onto the sphere.
UnitVector sphere_extrinsic_mean(std::span<const UnitVector> sample);

/// d_mu P_j = (I - u u^T) / ‖mu‖ with u = mu / ‖mu‖.
SymmetricMatrix sphere_projection_differential(const AmbientVector& mu);

/// Frame of the tangent space at `mean` (Householder completion).
TangentFrame sphere_tangent_frame(const UnitVector& mean);

/**
 * Sample extrinsic covariance in `frame` coordinates:
 * F^T dP S dP^T F with dP the differential at the ambient mean and S the
 * (1/n) ambient sample covariance. `frame` must sit at `mean`.
 */
SymmetricMatrix sphere_extrinsic_covariance(std::span<const UnitVector> sample,
                                            const UnitVector& mean,
                                            const TangentFrame& frame);

/// Great circle cos(t) mean + sin(t) direction. `direction` must be a unit vector orthogonal to `mean`.
UnitVector sphere_pc_curve(const UnitVector& mean, const AmbientVector& direction, double t);

/**
 * Projects `x` onto the principal great circle through `mean` along
 * `pc_direction`: orthogonal projection into the tangent plane, restriction to
 * the component along `pc_direction`, then radial projection back to the sphere.
 */
UnitVector sphere_project_to_pc(const UnitVector& x,
                                const UnitVector& mean,
                                const TangentFrame& frame,
                                const AmbientVector& pc_direction);

/// The unit sphere S^d under the inclusion map.
class SphereBackend final : public EmbeddingBackend
{
  public:
    explicit SphereBackend(Index d);

    Index ambient_dim() const override { return d_ + 1; }
    Index manifold_dim() const override { return d_; }

    bool is_focal(const AmbientVector& x) const override;
    AmbientVector project(const AmbientVector& x) const override;
    Eigen::MatrixXd projection_differential(const AmbientVector& x) const override;
    TangentFrame tangent_frame(const AmbientVector& embedded_point) const override;

    AmbientVector embed(const UnitVector& p) const { return p.coords(); }
    UnitVector from_embedded(const AmbientVector& y) const { return UnitVector(y); }

    /// ‖j(p) - j(q)‖.
    double chord_distance(const UnitVector& p, const UnitVector& q) const;

  private:
    Index d_;
};

} // namespace epca::sphere

#endif
