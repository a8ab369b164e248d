#include "epca/oracle/oracle.hpp"

#include "epca/core/errors.hpp"
#include "epca/core/reduce.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace epca::oracle {

std::vector<sphere::UnitVector> fibonacci_sphere(std::size_t count)
{
    if (count == 0)
        throw InputError("fibonacci_sphere: empty grid");
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<sphere::UnitVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        Eigen::Vector3d p(r * std::cos(phi), r * std::sin(phi), z);
        out.emplace_back(p / p.norm());
    }
    return out;
}

std::vector<sphere::UnitVector> circle_grid(std::size_t count)
{
    if (count == 0)
        throw InputError("circle_grid: empty grid");
    std::vector<sphere::UnitVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
        out.emplace_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
    return out;
}

std::vector<shape::PreShape> cp1_grid(std::size_t per_axis)
{
    if (per_axis < 2)
        throw InputError("cp1_grid: need at least 2 points per axis");
    const Eigen::MatrixXd b = shape::helmert_basis(3);
    std::vector<shape::PreShape> out;
    out.reserve(per_axis * per_axis);
    for (std::size_t i = 0; i < per_axis; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(per_axis - 1);
        for (std::size_t j = 0; j < per_axis; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(per_axis);
            const Eigen::VectorXcd z = std::cos(theta / 2.0) * b.col(0).cast<Complex>() +
                                       std::polar(std::sin(theta / 2.0), phi) * b.col(1).cast<Complex>();
            out.push_back(shape::PreShape::from_raw(z));
        }
    }
    return out;
}

std::vector<sphere::UnitVector> sphere_grid(const GridSpec& grid)
{
    switch (grid.kind) {
    case GridKind::FibonacciSphere:
        return fibonacci_sphere(grid.resolution);
    case GridKind::UniformCircle:
        return circle_grid(grid.resolution);
    default:
        throw InputError("grid kind does not describe a sphere");
    }
}

Eigen::MatrixXd embed_all(const sphere::SphereBackend& backend, std::span<const sphere::UnitVector> points)
{
    Eigen::MatrixXd out(backend.ambient_dim(), static_cast<Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        out.col(static_cast<Index>(i)) = backend.embed(points[i]);
    return out;
}

Eigen::MatrixXd embed_all(const shape::VeroneseWhitneyBackend<Complex>& backend, std::span<const shape::PreShape> points)
{
    Eigen::MatrixXd out(backend.ambient_dim(), static_cast<Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        out.col(static_cast<Index>(i)) = backend.embed(points[i].z());
    return out;
}

namespace {

double frechet_embedded(const Eigen::VectorXd& point, const Eigen::MatrixXd& embedded_sample)
{
    double sum = 0.0;
    for (Index i = 0; i < embedded_sample.cols(); ++i)
        sum += (point - embedded_sample.col(i)).squaredNorm();
    return sum / static_cast<double>(embedded_sample.cols());
}

} // namespace

double frechet_value(const sphere::UnitVector& point,
                     std::span<const sphere::UnitVector> sample,
                     const sphere::SphereBackend& backend)
{
    return frechet_embedded(backend.embed(point), embed_all(backend, sample));
}

double frechet_value(const shape::PreShape& point,
                     std::span<const shape::PreShape> sample,
                     const shape::VeroneseWhitneyBackend<Complex>& backend)
{
    return frechet_embedded(backend.embed(point.z()), embed_all(backend, sample));
}

GridMinimum frechet_grid_argmin(const Eigen::MatrixXd& embedded_sample, const Eigen::MatrixXd& embedded_grid)
{
    if (embedded_grid.cols() == 0)
        throw InputError("frechet_grid_argmin: empty grid");
    if (embedded_sample.cols() == 0)
        throw InputError("frechet_grid_argmin: empty sample");

    const std::size_t g = static_cast<std::size_t>(embedded_grid.cols());
    const std::size_t chunk = 4096;
    const std::size_t chunks = (g + chunk - 1) / chunk;
    std::vector<GridMinimum> best(chunks, GridMinimum{0, std::numeric_limits<double>::infinity()});
    parallel_for(chunks, [&](std::size_t c) {
        const std::size_t end = std::min(g, (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
            const double v = frechet_embedded(embedded_grid.col(static_cast<Index>(i)), embedded_sample);
            if (v < best[c].value)
                best[c] = GridMinimum{i, v};
        }
    });
    GridMinimum out = best.front();
    for (const GridMinimum& b : best) {
        if (b.value < out.value)
            out = b;
    }
    return out;
}

sphere::UnitVector frechet_grid_argmin(std::span<const sphere::UnitVector> sample,
                                       const sphere::SphereBackend& backend,
                                       const GridSpec& grid)
{
    const auto points = sphere_grid(grid);
    if (points.front().ambient_dim() != backend.ambient_dim())
        throw InputError("grid and backend differ in ambient dimension");
    const GridMinimum best = frechet_grid_argmin(embed_all(backend, sample), embed_all(backend, points));
    return points[best.index];
}

shape::PreShape frechet_grid_argmin(std::span<const shape::PreShape> sample,
                                    const shape::VeroneseWhitneyBackend<Complex>& backend,
                                    const GridSpec& grid)
{
    if (grid.kind != GridKind::UniformCP1 || backend.order() != 3)
        throw InputError("shape grid search is only available for triangles (k = 3) on a CP1 grid");
    const auto points = cp1_grid(grid.resolution);
    const GridMinimum best = frechet_grid_argmin(embed_all(backend, sample), embed_all(backend, points));
    return points[best.index];
}

Eigen::MatrixXd finite_diff_dP(const EmbeddingBackend& backend, const AmbientVector& mu, double h)
{
    if (!(h >= 1e-7 && h <= 1e-3))
        throw InputError("finite_diff_dP: step must lie in [1e-7, 1e-3]");
    const Index n = backend.ambient_dim();
    if (mu.size() != n)
        throw InputError("finite_diff_dP: point has the wrong ambient dimension");
    Eigen::MatrixXd d(n, n);
    for (Index b = 0; b < n; ++b) {
        AmbientVector plus = mu;
        AmbientVector minus = mu;
        plus[b] += h;
        minus[b] -= h;
        d.col(b) = (backend.project(plus) - backend.project(minus)) / (2.0 * h);
    }
    return d;
}

} // namespace epca::oracle
