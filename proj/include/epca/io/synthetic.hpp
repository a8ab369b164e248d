#ifndef EPCA_IO_SYNTHETIC_HPP
#define EPCA_IO_SYNTHETIC_HPP

#include "epca/io/contour_io.hpp"
#include "epca/shape/contour.hpp"
#include "epca/sphere/sphere.hpp"

#include <cstdint>
#include <vector>

namespace epca::io {

struct SyntheticSphereConfig
{
    std::size_t n = 300;
    AmbientVector mean_direction;
    std::vector<double> tangent_sigmas;  // one per tangent axis, > 0
    std::uint64_t seed = 0;
};

/// Unit (0.2153, 0.8692, 0.4461), the default sphere-demo mean direction.
AmbientVector default_sphere_mean();

/**
 * Point i uses RNG stream i: Gaussian offsets g_a * sigma_a along the columns
 * of complete_orthonormal_frame(mean_direction), then radial projection of
 * mean + offset back onto the sphere.
 */
sphere::SphereSample gen_sphere_sample(const SyntheticSphereConfig& cfg);

/**
 * Closed butterfly-like curve r(phi) = 1 - 0.35 cos 4phi + 0.25 cos 2phi
 * + 0.12 sin phi + 0.08 sin 3phi, resampled to k arclength-uniform points
 * starting at phi = 0.
 */
shape::Contour butterfly_template(std::size_t k);

/**
 * n perturbed copies of `templ`. Contour i uses RNG stream i and gets a radial
 * displacement noise_sigma * R * g(s) at arclength fraction s, where R is the
 * RMS radius and
 *
 *   g(s) = a1 cos(4 pi s) + a2 sin(6 pi s) + sum_{f=2..10} (b_f cos 2 pi f s + c_f sin 2 pi f s),
 *
 * a1 ~ N(0, 1), a2 ~ N(0, 0.6^2), b_f, c_f ~ N(0, 0.05^2). The displacement
 * is made orthogonal (complex inner product) to the centered template and to
 * constants, so the template shape is the population VW mean. A random
 * rotation, log-normal scale and translation follow.
 */
ContourDataset gen_contour_sample(const shape::Contour& templ, std::size_t n, double noise_sigma, std::uint64_t seed);

/// Hex FNV-1a hash of the concatenated contour CSV texts.
std::string dataset_content_hash(const std::vector<shape::Contour>& contours);

} // namespace epca::io

#endif
