#ifndef EPCA_TESTS_HELPERS_HPP
#define EPCA_TESTS_HELPERS_HPP

#include "epca/core/rng.hpp"
#include "epca/core/types.hpp"
#include "epca/shape/preshape.hpp"
#include "epca/sphere/sphere.hpp"

#include <Eigen/Core>
#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <vector>

namespace epca::testing {

inline AmbientVector random_unit(Rng& rng, Index n)
{
    AmbientVector v(n);
    for (Index i = 0; i < n; ++i)
        v[i] = rng.normal();
    return v / v.norm();
}

inline Eigen::MatrixXd random_orthogonal(Rng& rng, Index n)
{
    Eigen::MatrixXd a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            a(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    if (q.determinant() < 0)
        q.col(0) = -q.col(0);
    return q;
}

inline sphere::SphereSample concentrated_sample(Rng& rng, Index dim, std::size_t n, double spread)
{
    const AmbientVector centre = random_unit(rng, dim);
    sphere::SphereSample out;
    for (std::size_t i = 0; i < n; ++i) {
        AmbientVector v = centre;
        for (Index a = 0; a < dim; ++a)
            v[a] += spread * (a == 0 ? 2.0 : 1.0) * rng.normal();
        out.push_back(sphere::sphere_project(v));
    }
    return out;
}

inline std::vector<shape::PreShape> perturbed_shapes(Rng& rng, Index k, std::size_t n, double spread)
{
    Eigen::VectorXcd base(k);
    for (Index j = 0; j < k; ++j)
        base[j] = Complex(rng.normal(), rng.normal());
    std::vector<shape::PreShape> out;
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::VectorXcd z = base;
        for (Index j = 0; j < k; ++j)
            z[j] += Complex(spread * rng.normal(), spread * rng.normal());
        z *= std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
        out.push_back(shape::PreShape::from_raw(z));
    }
    return out;
}

inline double projector_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace epca::testing

#endif
