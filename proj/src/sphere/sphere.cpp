#include "epca/sphere/sphere.hpp"

#include "epca/core/errors.hpp"
#include "epca/core/reduce.hpp"

#include <cmath>
#include <sstream>

namespace epca::sphere {
namespace {

std::string norm_message(double norm)
{
    std::ostringstream os;
    os << "ambient point is focal for the sphere (norm " << norm << " <= " << kFocalEpsilon
       << "): the projection onto the sphere, and hence the extrinsic mean, is undefined";
    return os.str();
}

} // namespace

UnitVector::UnitVector(AmbientVector coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2)
        throw InputError("unit vector needs ambient dimension >= 2");
    if (!coords_.allFinite() || std::abs(coords_.norm() - 1.0) > kUnitTolerance)
        throw InputError("point is not on the unit sphere (norm " + std::to_string(coords_.norm()) + ")");
}

Eigen::MatrixXd sample_matrix(std::span<const UnitVector> sample)
{
    if (sample.empty())
        throw InputError("sphere sample is empty");
    const Index n_amb = sample.front().ambient_dim();
    Eigen::MatrixXd out(n_amb, static_cast<Index>(sample.size()));
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i].ambient_dim() != n_amb)
            throw InputError("sphere sample mixes ambient dimensions");
        out.col(static_cast<Index>(i)) = sample[i].coords();
    }
    return out;
}

UnitVector sphere_project(const AmbientVector& x)
{
    const double norm = x.norm();
    if (!(norm > kFocalEpsilon))
        throw FocalPointError(norm_message(norm));
    // Renormalize once more so the result clears the unit-norm check even for huge/tiny inputs.
    AmbientVector u = x / norm;
    u /= u.norm();
    return UnitVector(std::move(u));
}

AmbientVector ambient_mean(std::span<const UnitVector> sample)
{
    const Eigen::MatrixXd x = sample_matrix(sample);
    return pairwise_column_sum(x, canonical_order(x)) / static_cast<double>(x.cols());
}

UnitVector sphere_extrinsic_mean(std::span<const UnitVector> sample)
{
    return sphere_project(ambient_mean(sample));
}

SymmetricMatrix sphere_projection_differential(const AmbientVector& mu)
{
    const double norm = mu.norm();
    if (!(norm > kFocalEpsilon))
        throw FocalPointError(norm_message(norm));
    const Eigen::VectorXd u = mu / norm;
    const Index n = mu.size();
    return SymmetricMatrix((Eigen::MatrixXd::Identity(n, n) - u * u.transpose()) / norm);
}

TangentFrame sphere_tangent_frame(const UnitVector& mean)
{
    return TangentFrame(mean.coords(), complete_orthonormal_frame(mean.coords()));
}

SymmetricMatrix sphere_extrinsic_covariance(std::span<const UnitVector> sample,
                                            const UnitVector& mean,
                                            const TangentFrame& frame)
{
    const Eigen::MatrixXd x = sample_matrix(sample);
    if (frame.ambient_dim() != x.rows() || mean.ambient_dim() != x.rows())
        throw InputError("sphere_extrinsic_covariance: dimension mismatch");

    const std::vector<Index> order = canonical_order(x);
    const double n = static_cast<double>(x.cols());
    const AmbientVector xbar = pairwise_column_sum(x, order) / n;
    const double norm = xbar.norm();
    if (!(norm > kFocalEpsilon))
        throw FocalPointError(norm_message(norm));

    // Columns in canonical order keep the Gram product independent of input order.
    Eigen::MatrixXd centered(x.rows(), x.cols());
    for (Index i = 0; i < x.cols(); ++i)
        centered.col(i) = x.col(order[static_cast<std::size_t>(i)]) - xbar;

    // F^T (I - u u^T) = F^T for a frame orthogonal to u, so F^T dP = F^T / ‖xbar‖.
    const Eigen::MatrixXd a = frame.vectors().transpose() * sphere_projection_differential(xbar).matrix();
    const Eigen::MatrixXd projected = a * centered;
    return SymmetricMatrix(projected * projected.transpose() / n);
}

UnitVector sphere_pc_curve(const UnitVector& mean, const AmbientVector& direction, double t)
{
    if (direction.size() != mean.ambient_dim())
        throw InputError("sphere_pc_curve: direction has wrong dimension");
    if (std::abs(direction.norm() - 1.0) > 1e-9)
        throw InputError("sphere_pc_curve: direction must be a unit vector");
    if (std::abs(direction.dot(mean.coords())) > 1e-9)
        throw InputError("sphere_pc_curve: direction is not orthogonal to the mean");
    AmbientVector p = std::cos(t) * mean.coords() + std::sin(t) * direction;
    p /= p.norm();
    return UnitVector(std::move(p));
}

UnitVector sphere_project_to_pc(const UnitVector& x,
                                const UnitVector& mean,
                                const TangentFrame& frame,
                                const AmbientVector& pc_direction)
{
    if (x.ambient_dim() != mean.ambient_dim() || pc_direction.size() != mean.ambient_dim())
        throw InputError("sphere_project_to_pc: dimension mismatch");
    if (std::abs(pc_direction.norm() - 1.0) > 1e-9 || std::abs(pc_direction.dot(mean.coords())) > 1e-9)
        throw InputError("sphere_project_to_pc: pc_direction must be a unit tangent vector at the mean");

    const Eigen::VectorXd u = tangential_component(x.coords() - mean.coords(), frame);
    const Eigen::VectorXd dir = tangential_component(pc_direction, frame);
    const double s = u.dot(dir);
    return sphere_project(mean.coords() + s * pc_direction);
}

SphereBackend::SphereBackend(Index d) : d_(d)
{
    if (d < 1)
        throw InputError("sphere dimension must be >= 1");
}

bool SphereBackend::is_focal(const AmbientVector& x) const
{
    return !(x.norm() > kFocalEpsilon);
}

AmbientVector SphereBackend::project(const AmbientVector& x) const
{
    if (x.size() != ambient_dim())
        throw InputError("sphere backend: ambient dimension mismatch");
    return sphere_project(x).coords();
}

Eigen::MatrixXd SphereBackend::projection_differential(const AmbientVector& x) const
{
    return sphere_projection_differential(x).matrix();
}

TangentFrame SphereBackend::tangent_frame(const AmbientVector& embedded_point) const
{
    return sphere_tangent_frame(UnitVector(embedded_point));
}

double SphereBackend::chord_distance(const UnitVector& p, const UnitVector& q) const
{
    return (p.coords() - q.coords()).norm();
}

} // namespace epca::sphere
