#ifndef EPCA_ORACLE_ORACLE_HPP
#define EPCA_ORACLE_ORACLE_HPP

// Brute-force checks for the closed forms: Frechet-function minimization over
// deterministic grids and central-difference projection differentials. These
// routines deliberately avoid the closed-form code paths they are used to test.

#include "epca/core/backend.hpp"
#include "epca/core/types.hpp"
#include "epca/shape/preshape.hpp"
#include "epca/shape/vw_backend.hpp"
#include "epca/sphere/sphere.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

namespace epca::oracle {

enum class GridKind
{
    FibonacciSphere,  // S^2, `resolution` points
    UniformCircle,    // S^1, `resolution` equally spaced angles
    UniformCP1,       // shapes of triangles, `resolution` x `resolution` (theta, phi) grid
};

struct GridSpec
{
    GridKind kind;
    std::size_t resolution;
};

/// Fibonacci lattice on S^2 (golden-angle spiral, z uniformly spaced in (-1, 1)).
std::vector<sphere::UnitVector> fibonacci_sphere(std::size_t count);

std::vector<sphere::UnitVector> circle_grid(std::size_t count);

/**
 * Triangle shapes cos(theta/2) b1 + e^{i phi} sin(theta/2) b2 over a uniform
 * grid, theta in [0, pi] (endpoints included), phi in [0, 2 pi), with b1, b2
 * the Helmert basis of centered C^3.
 */
std::vector<shape::PreShape> cp1_grid(std::size_t per_axis);

std::vector<sphere::UnitVector> sphere_grid(const GridSpec& grid);

/// Embedded points (one column each) for the two backends.
Eigen::MatrixXd embed_all(const sphere::SphereBackend& backend, std::span<const sphere::UnitVector> points);
Eigen::MatrixXd embed_all(const shape::VeroneseWhitneyBackend<Complex>& backend, std::span<const shape::PreShape> points);

/// (1/n) sum_i ‖j(point) - j(x_i)‖^2, computed term by term.
double frechet_value(const sphere::UnitVector& point,
                     std::span<const sphere::UnitVector> sample,
                     const sphere::SphereBackend& backend);
double frechet_value(const shape::PreShape& point,
                     std::span<const shape::PreShape> sample,
                     const shape::VeroneseWhitneyBackend<Complex>& backend);

struct GridMinimum
{
    std::size_t index;
    double value;
};

/// Grid point with the smallest empirical Frechet value; the lowest index wins ties.
GridMinimum frechet_grid_argmin(const Eigen::MatrixXd& embedded_sample, const Eigen::MatrixXd& embedded_grid);

sphere::UnitVector frechet_grid_argmin(std::span<const sphere::UnitVector> sample,
                                       const sphere::SphereBackend& backend,
                                       const GridSpec& grid);
shape::PreShape frechet_grid_argmin(std::span<const shape::PreShape> sample,
                                    const shape::VeroneseWhitneyBackend<Complex>& backend,
                                    const GridSpec& grid);

/**
 * Central-difference d_mu P_j: column b is
 * (P_j(mu + h e_b) - P_j(mu - h e_b)) / (2 h). Requires h in [1e-7, 1e-3].
 * FocalPointError from the stencil propagates.
 */
Eigen::MatrixXd finite_diff_dP(const EmbeddingBackend& backend, const AmbientVector& mu, double h = 1e-5);

} // namespace epca::oracle

#endif
