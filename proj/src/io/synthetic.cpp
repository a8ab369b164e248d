#include "epca/io/synthetic.hpp"

#include "epca/core/errors.hpp"
#include "epca/core/frame.hpp"
#include "epca/core/reduce.hpp"
#include "epca/core/rng.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace epca::io {

AmbientVector default_sphere_mean()
{
    AmbientVector m(3);
    m << 0.2153, 0.8692, 0.4461;
    return m / m.norm();
}

sphere::SphereSample gen_sphere_sample(const SyntheticSphereConfig& cfg)
{
    if (cfg.n < 1)
        throw InputError("gen_sphere_sample: n must be at least 1");
    const Index dim = cfg.mean_direction.size();
    if (dim < 2)
        throw InputError("gen_sphere_sample: mean direction needs at least 2 coordinates");
    if (static_cast<Index>(cfg.tangent_sigmas.size()) != dim - 1)
        throw InputError("gen_sphere_sample: expected " + std::to_string(dim - 1) + " tangent sigmas, got " +
                         std::to_string(cfg.tangent_sigmas.size()));
    for (double s : cfg.tangent_sigmas) {
        if (!(s > 0.0) || !std::isfinite(s))
            throw InputError("gen_sphere_sample: sigmas must be positive");
    }
    const sphere::UnitVector mean(cfg.mean_direction);
    const Eigen::MatrixXd frame = complete_orthonormal_frame(mean.coords());

    std::vector<AmbientVector> points(cfg.n);
    parallel_for(cfg.n, [&](std::size_t i) {
        Rng rng(cfg.seed, i);
        Eigen::VectorXd offset(dim - 1);
        for (Index a = 0; a < dim - 1; ++a)
            offset[a] = cfg.tangent_sigmas[static_cast<std::size_t>(a)] * rng.normal();
        points[i] = mean.coords() + frame * offset;
    });
    sphere::SphereSample out;
    out.reserve(cfg.n);
    for (const auto& p : points)
        out.push_back(sphere::sphere_project(p));
    return out;
}

shape::Contour butterfly_template(std::size_t k)
{
    if (k < 3)
        throw InputError("butterfly_template: k must be at least 3");
    const std::size_t dense = std::max<std::size_t>(8 * k, 2048);
    std::vector<shape::Point2> pts;
    pts.reserve(dense);
    for (std::size_t i = 0; i < dense; ++i) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(dense);
        const double r = 1.0 - 0.35 * std::cos(4.0 * phi) + 0.25 * std::cos(2.0 * phi) + 0.12 * std::sin(phi) +
                         0.08 * std::sin(3.0 * phi);
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }
    return shape::resample_arclength(shape::Contour(std::move(pts)), k);
}

std::string dataset_content_hash(const std::vector<shape::Contour>& contours)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& c : contours)
        h = fnv1a64(contour_csv(c), h);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ContourDataset gen_contour_sample(const shape::Contour& templ, std::size_t n, double noise_sigma, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("gen_contour_sample: n must be at least 1");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw InputError("gen_contour_sample: noise_sigma must be non-negative");
    const std::size_t k = templ.size();
    const Eigen::VectorXcd raw = shape::to_complex(templ);
    const Complex centroid = raw.mean();
    const Eigen::VectorXcd tc = raw.array() - centroid;
    const double len2 = tc.squaredNorm();
    const double rms = std::sqrt(len2 / static_cast<double>(k));

    // Arclength fraction of every template vertex.
    std::vector<double> s(k, 0.0);
    const double total = shape::perimeter(templ);
    for (std::size_t j = 1; j < k; ++j)
        s[j] = s[j - 1] + (templ[j] - templ[j - 1]).norm() / total;

    std::vector<shape::Contour> contours(n);
    parallel_for(n, [&](std::size_t i) {
        Rng rng(seed, i);
        const double a1 = rng.normal();
        const double a2 = 0.6 * rng.normal();
        double b[11] = {};
        double c[11] = {};
        for (int f = 2; f <= 10; ++f) {
            b[f] = 0.05 * rng.normal();
            c[f] = 0.05 * rng.normal();
        }
        const double rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double scale = std::exp(0.3 * rng.normal());
        const Complex shift(3.0 * rms * rng.normal(), 3.0 * rms * rng.normal());

        Eigen::VectorXcd delta(static_cast<Index>(k));
        for (std::size_t j = 0; j < k; ++j) {
            const double w = 2.0 * std::numbers::pi * s[j];
            double g = a1 * std::cos(2.0 * w) + a2 * std::sin(3.0 * w);
            for (int f = 2; f <= 10; ++f)
                g += b[f] * std::cos(f * w) + c[f] * std::sin(f * w);
            const Complex radial = tc[static_cast<Index>(j)] / std::abs(tc[static_cast<Index>(j)]);
            delta[static_cast<Index>(j)] = noise_sigma * rms * g * radial;
        }
        delta.array() -= delta.mean();
        delta -= tc * (tc.dot(delta) / len2);

        const Complex similarity = std::polar(scale, rotation);
        std::vector<shape::Point2> pts(k);
        for (std::size_t j = 0; j < k; ++j) {
            const Complex z = similarity * (tc[static_cast<Index>(j)] + delta[static_cast<Index>(j)]) + centroid + shift;
            pts[j] = shape::Point2(z.real(), z.imag());
        }
        contours[i] = shape::normalize_orientation(shape::Contour(std::move(pts)));
    });

    ContourDataset out;
    out.name = "synthetic_contours";
    out.contours = std::move(contours);
    out.k_common = k;
    for (std::size_t i = 0; i < n; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "contour_%02zu.csv", i);
        out.files.emplace_back(buf);
    }
    out.provenance = {
        {"generator", "gen_contour_sample"},
        {"rng", "mt19937_64, stream i seeded splitmix64(seed ^ splitmix64(i + 0x9E3779B97F4A7C15))"},
        {"seed", seed},
        {"n", n},
        {"k", k},
        {"noise_sigma", noise_sigma},
        {"content_fnv1a64", dataset_content_hash(out.contours)},
    };
    return out;
}

} // namespace epca::io
