#include "epca/shape/preshape.hpp"

#include "epca/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace epca::shape {

PreShape::PreShape(Eigen::VectorXcd z) : z_(std::move(z))
{
    if (z_.size() < 3)
        throw InputError("preshape needs k >= 3");
    if (!z_.allFinite())
        throw InputError("preshape has non-finite entries");
    if (std::abs(z_.sum()) > kPreShapeTolerance)
        throw InputError("preshape is not centered");
    if (std::abs(z_.norm() - 1.0) > kPreShapeTolerance)
        throw InputError("preshape does not have unit norm");
}

PreShape PreShape::from_raw(const Eigen::VectorXcd& z)
{
    if (!z.allFinite())
        throw InputError("preshape has non-finite entries");
    Eigen::VectorXcd centered = z.array() - z.mean();
    const double norm = centered.norm();
    if (!(norm > 0.0) || norm <= 1e-14 * std::max(1.0, z.cwiseAbs().maxCoeff()))
        throw InputError("degenerate configuration: all points coincide");
    centered /= norm;
    // Second pass absorbs rounding left by the first.
    centered.array() -= centered.mean();
    centered /= centered.norm();
    return PreShape(std::move(centered));
}

PreShape to_preshape(const Contour& c)
{
    return PreShape::from_raw(to_complex(c));
}

PreShape phase_normalized(const PreShape& p)
{
    const Eigen::VectorXcd& z = p.z();
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < z.size(); ++i) {
        const double a = std::abs(z[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    const Complex phase = std::conj(z[best]) / best_abs;
    Eigen::VectorXcd out = z * phase;
    out[best] = Complex(best_abs, 0.0);
    return PreShape(std::move(out));
}

double shape_chord_distance(const PreShape& p, const PreShape& q)
{
    if (p.k() != q.k())
        throw InputError("shape_chord_distance: preshapes have different k");
    // ‖w - <z, w> z‖^2 = 1 - |<z, w>|^2 for unit z, w.
    const Complex c = p.z().dot(q.z());
    return std::numbers::sqrt2 * (q.z() - c * p.z()).norm();
}

Contour preshape_contour(const PreShape& p)
{
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(p.k()));
    for (Index i = 0; i < p.k(); ++i)
        pts.emplace_back(p.z()[i].real(), p.z()[i].imag());
    return Contour(std::move(pts));
}

Eigen::MatrixXcd preshape_matrix(std::span<const PreShape> sample)
{
    if (sample.empty())
        throw InputError("shape sample is empty");
    const Index k = sample.front().k();
    Eigen::MatrixXcd z(k, static_cast<Index>(sample.size()));
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (sample[i].k() != k)
            throw InputError("shape sample mixes different numbers of points");
        z.col(static_cast<Index>(i)) = sample[i].z();
    }
    return z;
}

Eigen::MatrixXd helmert_basis(Index k)
{
    if (k < 2)
        throw InputError("helmert_basis: k must be >= 2");
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k - 1);
    for (Index j = 1; j < k; ++j) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(j) * static_cast<double>(j + 1));
        h.col(j - 1).head(j).setConstant(scale);
        h(j, j - 1) = -static_cast<double>(j) * scale;
    }
    return h;
}

} // namespace epca::shape
