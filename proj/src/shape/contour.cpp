#include "epca/shape/contour.hpp"

#include "epca/core/errors.hpp"

#include <cmath>
#include <numbers>

namespace epca::shape {

Contour::Contour(std::vector<Point2> points) : points_(std::move(points))
{
    const std::size_t k = points_.size();
    if (k < 3)
        throw InputError("contour needs at least 3 points, got " + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (!points_[i].allFinite())
            throw InputError("contour point " + std::to_string(i) + " is not finite");
        if (points_[i] == points_[(i + 1) % k])
            throw InputError("contour points " + std::to_string(i) + " and " + std::to_string((i + 1) % k) +
                             " coincide");
    }
}

double signed_area(const Contour& c)
{
    const auto& p = c.points();
    double twice = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point2& a = p[i];
        const Point2& b = p[(i + 1) % p.size()];
        twice += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * twice;
}

double perimeter(const Contour& c)
{
    const auto& p = c.points();
    double len = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        len += (p[(i + 1) % p.size()] - p[i]).norm();
    return len;
}

Contour normalize_orientation(const Contour& c)
{
    const double area = signed_area(c);
    if (area == 0.0)
        throw InputError("contour has zero signed area; orientation is undefined");
    if (area > 0.0)
        return c;
    std::vector<Point2> reversed;
    reversed.reserve(c.size());
    reversed.push_back(c[0]);
    for (std::size_t i = c.size() - 1; i >= 1; --i)
        reversed.push_back(c[i]);
    return Contour(std::move(reversed));
}

Contour resample_arclength(const Contour& c, std::size_t m)
{
    if (m < 3)
        throw InputError("resample_arclength: need at least 3 output points");
    const auto& p = c.points();
    const std::size_t k = p.size();

    std::vector<double> cumulative(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        cumulative[i + 1] = cumulative[i] + (p[(i + 1) % k] - p[i]).norm();
    const double length = cumulative[k];
    if (!(length > 0.0))
        throw InputError("resample_arclength: contour has zero perimeter");

    std::vector<Point2> out;
    out.reserve(m);
    std::size_t edge = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double s = length * static_cast<double>(i) / static_cast<double>(m);
        while (edge + 1 < k && cumulative[edge + 1] <= s)
            ++edge;
        const double edge_len = cumulative[edge + 1] - cumulative[edge];
        const double frac = edge_len > 0.0 ? (s - cumulative[edge]) / edge_len : 0.0;
        const Point2& a = p[edge];
        const Point2& b = p[(edge + 1) % k];
        out.push_back(frac == 0.0 ? a : Point2(a + frac * (b - a)));
    }
    return Contour(std::move(out));
}

double total_curvature(const Contour& c)
{
    const auto& p = c.points();
    const std::size_t k = p.size();
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Point2 in = p[i] - p[(i + k - 1) % k];
        const Point2 out = p[(i + 1) % k] - p[i];
        const double cross = in.x() * out.y() - in.y() * out.x();
        total += std::abs(std::atan2(cross, in.dot(out)));
    }
    return total;
}

Contour apply_similarity(const Contour& c, double rotation, double scale, const Point2& translation)
{
    const double cs = std::cos(rotation) * scale;
    const double sn = std::sin(rotation) * scale;
    std::vector<Point2> out;
    out.reserve(c.size());
    for (const Point2& q : c.points())
        out.emplace_back(cs * q.x() - sn * q.y() + translation.x(), sn * q.x() + cs * q.y() + translation.y());
    return Contour(std::move(out));
}

Eigen::VectorXcd to_complex(const Contour& c)
{
    Eigen::VectorXcd z(static_cast<Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        z[static_cast<Index>(i)] = Complex(c[i].x(), c[i].y());
    return z;
}

} // namespace epca::shape
