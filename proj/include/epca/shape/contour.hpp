#ifndef EPCA_SHAPE_CONTOUR_HPP
#define EPCA_SHAPE_CONTOUR_HPP

#include "epca/core/types.hpp"

#include <Eigen/Core>

#include <vector>

namespace epca::shape {

using Point2 = Eigen::Vector2d;

/**
 * Closed planar polygon given by k ordered vertices; the edge from the last
 * vertex back to the first is implicit. Vertex 0 is the starting landmark.
 *
 * Construction checks k >= 3, finite coordinates, and that cyclically
 * consecutive vertices are distinct. Orientation is not enforced here; see
 * normalize_orientation().
 */
class Contour
{
  public:
    Contour() = default;
    explicit Contour(std::vector<Point2> points);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point2>& points() const noexcept { return points_; }
    const Point2& operator[](std::size_t i) const { return points_[i]; }

    bool operator==(const Contour& other) const { return points_ == other.points_; }

  private:
    std::vector<Point2> points_;
};

/// Shoelace signed area; positive for counterclockwise vertex order.
double signed_area(const Contour& c);

double perimeter(const Contour& c);

/**
 * Counterclockwise copy of `c`. A clockwise contour is reversed while keeping
 * vertex 0 in place: (p0, p_{k-1}, ..., p1). Throws InputError for zero area.
 */
Contour normalize_orientation(const Contour& c);

/**
 * m points at arclength positions i L / m, i = 0..m-1, along the closed
 * polygon starting at vertex 0, by linear interpolation along edges.
 */
Contour resample_arclength(const Contour& c, std::size_t m);

/// Sum of absolute exterior turning angles over all vertices (2 pi for convex polygons).
double total_curvature(const Contour& c);

/// z -> scale * e^{i rotation} z + translation applied to every vertex.
Contour apply_similarity(const Contour& c, double rotation, double scale, const Point2& translation);

/// Vertices as complex numbers x + i y.
Eigen::VectorXcd to_complex(const Contour& c);

} // namespace epca::shape

#endif
