#include "epca/engine/models.hpp"

namespace epca {

ModelFit<SphereModel::Point, SphereModel::Frame> SphereModel::fit(std::span<const Point> sample) const
{
    sphere::UnitVector mean = sphere::sphere_extrinsic_mean(sample);
    TangentFrame frame = sphere::sphere_tangent_frame(mean);
    SymmetricMatrix cov = sphere::sphere_extrinsic_covariance(sample, mean, frame);

    Eigen::MatrixXd scores(static_cast<Index>(sample.size()), frame.dim());
    for (std::size_t i = 0; i < sample.size(); ++i)
        scores.row(static_cast<Index>(i)) = tangential_component(sample[i].coords() - mean.coords(), frame).transpose();
    return {std::move(mean), std::move(frame), std::move(cov), std::move(scores)};
}

SphereModel::Direction SphereModel::push_forward(const Frame& frame, const Eigen::VectorXd& coords) const
{
    return frame.push_forward(coords);
}

SphereModel::Point SphereModel::curve(const Point& mean, const Direction& d, double t) const
{
    return sphere::sphere_pc_curve(mean, d, t);
}

SphereModel::Point SphereModel::project_score(const Point& mean, const Direction& d, double s) const
{
    return sphere::sphere_project(mean.coords() + s * d);
}

double SphereModel::chord_distance(const Point& p, const Point& q) const
{
    return (p.coords() - q.coords()).norm();
}

ModelFit<ShapeModel::Point, ShapeModel::Frame> ShapeModel::fit(std::span<const Point> sample) const
{
    shape::ShapeCovariance cov = shape::vw_extrinsic_covariance(sample);
    Eigen::MatrixXd scores = shape::vw_scores(sample, cov.frame);
    shape::PreShape mean = cov.frame.mean();
    return {std::move(mean), std::move(cov.frame), std::move(cov.s), std::move(scores)};
}

ShapeModel::Direction ShapeModel::push_forward(const Frame& frame, const Eigen::VectorXd& coords) const
{
    return frame.push_forward(coords);
}

ShapeModel::Point ShapeModel::curve(const Point& mean, const Direction& d, double t) const
{
    return shape::shape_pc_curve(mean, d, t);
}

ShapeModel::Point ShapeModel::project_score(const Point& mean, const Direction& d, double s) const
{
    return shape::shape_project_score(mean, d, s);
}

double ShapeModel::chord_distance(const Point& p, const Point& q) const
{
    return shape::shape_chord_distance(p, q);
}

} // namespace epca
