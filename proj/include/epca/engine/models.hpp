#ifndef EPCA_ENGINE_MODELS_HPP
#define EPCA_ENGINE_MODELS_HPP

#include "epca/core/frame.hpp"
#include "epca/engine/epca.hpp"
#include "epca/shape/preshape.hpp"
#include "epca/shape/vw.hpp"
#include "epca/sphere/sphere.hpp"

#include <span>

namespace epca {

/// Extrinsic PCA on S^d under the inclusion map.
struct SphereModel
{
    using Point = sphere::UnitVector;
    using Frame = TangentFrame;
    using Direction = AmbientVector;

    ModelFit<Point, Frame> fit(std::span<const Point> sample) const;
    Direction push_forward(const Frame& frame, const Eigen::VectorXd& coords) const;
    Point curve(const Point& mean, const Direction& d, double t) const;
    Point project_score(const Point& mean, const Direction& d, double s) const;
    double chord_distance(const Point& p, const Point& q) const;
};

/**
 * Extrinsic PCA of planar shapes under the Veronese-Whitney embedding.
 * Directions are complex tangent vectors in preshape space (see VwTangentFrame).
 */
struct ShapeModel
{
    using Point = shape::PreShape;
    using Frame = shape::VwTangentFrame;
    using Direction = Eigen::VectorXcd;

    ModelFit<Point, Frame> fit(std::span<const Point> sample) const;
    Direction push_forward(const Frame& frame, const Eigen::VectorXd& coords) const;
    Point curve(const Point& mean, const Direction& d, double t) const;
    Point project_score(const Point& mean, const Direction& d, double s) const;
    double chord_distance(const Point& p, const Point& q) const;
};

static_assert(EpcaModel<SphereModel>);
static_assert(EpcaModel<ShapeModel>);

} // namespace epca

#endif
