#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epca/core/errors.hpp"
#include "epca/engine/epca.hpp"
#include "epca/engine/models.hpp"
#include "epca/io/synthetic.hpp"

#include "../support/helpers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace epca;

namespace {

std::vector<shape::PreShape> preshapes(const io::ContourDataset& d)
{
    std::vector<shape::PreShape> out;
    for (const auto& c : d.contours)
        out.push_back(shape::to_preshape(c));
    return out;
}

sphere::SphereSample anisotropic_sample(std::uint64_t seed, std::size_t n = 300)
{
    io::SyntheticSphereConfig cfg;
    cfg.n = n;
    cfg.mean_direction = io::default_sphere_mean();
    cfg.tangent_sigmas = {0.18, 0.065};
    cfg.seed = seed;
    return io::gen_sphere_sample(cfg);
}

// Minimum over t of f(t): coarse grid, then golden-section refinement around the best node.
template <typename F>
double curve_distance(F f, double lo, double hi)
{
    const int nodes = 4000;
    double best_t = lo;
    double best = f(lo);
    for (int i = 1; i <= nodes; ++i) {
        const double t = lo + (hi - lo) * i / nodes;
        const double v = f(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double a = best_t - (hi - lo) / nodes;
    double b = best_t + (hi - lo) / nodes;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 100; ++it) {
        const double c = b - g * (b - a);
        const double d = a + g * (b - a);
        if (f(c) < f(d))
            b = d;
        else
            a = c;
    }
    return std::min(best, f(0.5 * (a + b)));
}

} // namespace

TEST_CASE("run_epca: identical samples give a zero spectrum")
{
    const SphereModel sm;
    const sphere::SphereSample same(7, sphere::sphere_project(Eigen::Vector3d(1, 2, 3)));
    const auto r = run_epca(sm, std::span<const sphere::UnitVector>(same));
    CHECK(r.eigenvalues.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(r.zero_variance);
    CHECK(r.explained_ratio.cwiseAbs().maxCoeff() == 0.0);

    Rng rng(1);
    const auto one = testing::perturbed_shapes(rng, 6, 1, 0.0);
    const std::vector<shape::PreShape> shapes(4, one[0]);
    const auto rs = run_epca(ShapeModel{}, std::span<const shape::PreShape>(shapes));
    CHECK(rs.eigenvalues.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(rs.eigenvalues.size() == 8);
}

TEST_CASE("run_epca: single sample sets the zero-spread flag")
{
    const sphere::SphereSample one{sphere::sphere_project(Eigen::Vector3d(0, 1, 1))};
    const auto r = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(one));
    CHECK(r.zero_spread);
    CHECK(r.sample_size() == 1);
    CHECK(r.scores.norm() == 0.0);
}

TEST_CASE("run_epca: concentrated anisotropic sphere sample is dominated by one component")
{
    const auto sample = anisotropic_sample(7);
    const auto r = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
    CHECK(r.explained_ratio[0] > 0.8);
}

TEST_CASE("run_epca: two-mode contour set explains most variance in two components")
{
    const auto data = io::gen_contour_sample(io::butterfly_template(100), 16, 0.1, 1);
    const auto shapes = preshapes(data);
    const auto r = run_epca(ShapeModel{}, std::span<const shape::PreShape>(shapes));
    CHECK(r.explained_ratio[0] + r.explained_ratio[1] >= 0.85);
}

TEST_CASE("EpcaResult invariants")
{
    Rng rng(2);
    const auto sample = testing::concentrated_sample(rng, 4, 30, 0.3);
    const auto r = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
    for (Index i = 0; i + 1 < r.eigenvalues.size(); ++i)
        CHECK(r.eigenvalues[i] >= r.eigenvalues[i + 1]);
    CHECK(r.eigenvalues.minCoeff() >= -1e-10);
    CHECK(std::abs(r.eigenvalues.sum() - r.covariance.trace()) <= 1e-10);
    for (Index i = 0; i < r.eigenvalues.size(); ++i)
        CHECK(std::abs(r.explained_ratio[i] - r.eigenvalues[i] / r.eigenvalues.sum()) <= 1e-12);
    CHECK(std::abs(r.explained_ratio.sum() - 1.0) <= 1e-12);
    const Index m = r.eigenvalues.size();
    CHECK((r.tangent_eigenvectors.transpose() * r.tangent_eigenvectors - Eigen::MatrixXd::Identity(m, m))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    CHECK(r.scores.rows() == 30);
    CHECK(r.scores.cols() == m);

    const AmbientVector ambient_mean = sphere::ambient_mean(sample);
    CHECK(tangential_component(ambient_mean - r.extrinsic_mean.coords(), r.frame).norm() <= 1e-9);
}

TEST_CASE("score of a sample equal to the mean is zero")
{
    Rng rng(3);
    auto sample = testing::concentrated_sample(rng, 3, 10, 0.2);
    const auto mean = sphere::sphere_extrinsic_mean(sample);
    sample.push_back(mean);
    sample.push_back(mean);
    const auto r = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
    CHECK(r.scores.row(r.scores.rows() - 1).norm() <= 1e-9);
    CHECK(r.scores.row(r.scores.rows() - 2).norm() <= 1e-9);

    const auto shapes = testing::perturbed_shapes(rng, 5, 9, 0.2);
    const auto rs = run_epca(ShapeModel{}, std::span<const shape::PreShape>(shapes));
    CHECK(rs.frame.coordinates(rs.extrinsic_mean).norm() <= 1e-9);
}

TEST_CASE("run_epca is invariant under sample permutation")
{
    Rng rng(4);
    auto sample = testing::concentrated_sample(rng, 3, 25, 0.4);
    const auto a = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
    std::reverse(sample.begin(), sample.end());
    std::rotate(sample.begin(), sample.begin() + 7, sample.end());
    const auto b = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
    CHECK(a.extrinsic_mean.coords() == b.extrinsic_mean.coords());
    CHECK(a.covariance.matrix() == b.covariance.matrix());
    CHECK(a.eigenvalues == b.eigenvalues);

    auto shapes = testing::perturbed_shapes(rng, 6, 12, 0.3);
    const auto sa = run_epca(ShapeModel{}, std::span<const shape::PreShape>(shapes));
    std::reverse(shapes.begin(), shapes.end());
    const auto sb = run_epca(ShapeModel{}, std::span<const shape::PreShape>(shapes));
    CHECK(sa.extrinsic_mean.z() == sb.extrinsic_mean.z());
    CHECK(sa.covariance.matrix() == sb.covariance.matrix());
    CHECK(sa.eigenvalues == sb.eigenvalues);
}

TEST_CASE("rotation equivariance of scores and frame span")
{
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto sample = testing::concentrated_sample(rng, 3, 20, 0.3);
        const Eigen::MatrixXd rot = testing::random_orthogonal(rng, 3);
        sphere::SphereSample rotated;
        for (const auto& p : sample)
            rotated.push_back(sphere::sphere_project(rot * p.coords()));
        const auto a = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(sample));
        const auto b = run_epca(SphereModel{}, std::span<const sphere::UnitVector>(rotated));
        CHECK(testing::projector_distance(rot * a.frame.projector() * rot.transpose(), b.frame.projector()) <= 1e-9);
        for (Index i = 0; i < a.scores.rows(); ++i)
            CHECK(std::abs(a.scores.row(i).norm() - b.scores.row(i).norm()) <= 1e-9);
    }
}

TEST_CASE("multiplicity_grouping examples")
{
    using Groups = std::vector<std::vector<Index>>;
    CHECK(multiplicity_grouping(Eigen::Vector2d(0.0305, 0.0044), 1e-6) == Groups{{0}, {1}});
    CHECK(multiplicity_grouping(Eigen::Vector3d(1, 1, 0), 1e-9) == Groups{{0, 1}, {2}});
    CHECK(multiplicity_grouping(Eigen::Vector3d(3, 2, 1), 0.0) == Groups{{0}, {1}, {2}});
}

TEST_CASE("explained_ratios and the default t grid")
{
    bool zero = false;
    const Eigen::VectorXd r = explained_ratios(Eigen::Vector2d(0.0305, 0.0044), &zero);
    CHECK(!zero);
    CHECK(r[0] == doctest::Approx(0.0305 / 0.0349));
    explained_ratios(Eigen::Vector2d(0, 0), &zero);
    CHECK(zero);
    const auto t = default_t_grid();
    CHECK(t.size() == 128);
    CHECK(t.front() == doctest::Approx(-std::numbers::pi / 2));
    CHECK(t.back() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("principal_curve_points on the sphere")
{
    const auto sample = anisotropic_sample(11);
    const SphereModel model;
    const auto r = run_epca(model, std::span<const sphere::UnitVector>(sample));
    const std::vector<double> origin{0.0};
    const auto at_zero = principal_curve_points(model, r, 0, origin);
    CHECK((at_zero[0].coords() - r.extrinsic_mean.coords()).norm() <= 1e-15);

    const auto grid = default_t_grid();
    const auto curve = principal_curve_points(model, r, 0, grid);
    const Eigen::Vector3d normal = Eigen::Vector3d(r.extrinsic_mean.coords()).cross(Eigen::Vector3d(r.ambient_eigenvectors[0]));
    for (const auto& p : curve) {
        CHECK(std::abs(p.coords().norm() - 1.0) <= 1e-12);
        CHECK(std::abs(normal.dot(Eigen::Vector3d(p.coords()))) <= 1e-9);
    }
    CHECK_THROWS_AS(principal_curve_points(model, r, 5, grid), InputError);
}

TEST_CASE("principal curves of tied eigenvalues are refused")
{
    const sphere::SphereSample sym{sphere::sphere_project(Eigen::Vector3d(0.3, 0, 1)),
                                   sphere::sphere_project(Eigen::Vector3d(-0.3, 0, 1)),
                                   sphere::sphere_project(Eigen::Vector3d(0, 0.3, 1)),
                                   sphere::sphere_project(Eigen::Vector3d(0, -0.3, 1))};
    const SphereModel model;
    const auto r = run_epca(model, std::span<const sphere::UnitVector>(sym));
    const std::vector<double> t{0.0, 0.1};
    CHECK_THROWS_AS(principal_curve_points(model, r, 0, t), MultiplicityError);
    CHECK_THROWS_AS(project_sample_to_pc(model, r, 1), MultiplicityError);
}

TEST_CASE("project_sample_to_pc lands on the principal curve")
{
    const SphereModel model;
    auto sample = anisotropic_sample(12, 60);
    const auto base = run_epca(model, std::span<const sphere::UnitVector>(sample));
    sample.push_back(base.extrinsic_mean);
    const auto r = run_epca(model, std::span<const sphere::UnitVector>(sample));
    const auto projected = project_sample_to_pc(model, r, 0);
    REQUIRE(projected.size() == sample.size());

    const auto& dir = r.ambient_eigenvectors[0];
    for (const auto& p : projected) {
        const double best = curve_distance(
            [&](double t) { return model.chord_distance(p, model.curve(r.extrinsic_mean, dir, t)); },
            -std::numbers::pi / 2, std::numbers::pi / 2);
        CHECK(best <= 1e-6);
    }
    const auto& last = projected.back();
    CHECK(model.chord_distance(last, base.extrinsic_mean) <= 1e-6);
}

TEST_CASE("projecting a point of the principal curve keeps it on the curve")
{
    const SphereModel model;
    const auto sample = anisotropic_sample(13, 50);
    const auto r = run_epca(model, std::span<const sphere::UnitVector>(sample));
    const auto once = project_sample_to_pc(model, r, 0);
    const AmbientVector dir = r.ambient_eigenvectors[0];
    const TangentFrame& frame = r.frame;
    const Eigen::Vector3d normal = Eigen::Vector3d(r.extrinsic_mean.coords()).cross(Eigen::Vector3d(dir));
    for (const auto& p : once) {
        const auto again = sphere::sphere_project_to_pc(p, r.extrinsic_mean, frame, dir);
        CHECK(std::abs(normal.dot(Eigen::Vector3d(again.coords()))) <= 1e-9);
        CHECK(dir.dot(again.coords()) * dir.dot(p.coords()) >= 0.0);
    }
}

// The normative composition (tangent score, then radial re-projection) maps the
// curve point at angle t to the one at atan(sin t), so it is not idempotent.
TEST_CASE("projecting twice is idempotent" * doctest::should_fail())
{
    const SphereModel model;
    const auto sample = anisotropic_sample(14, 50);
    const auto r = run_epca(model, std::span<const sphere::UnitVector>(sample));
    const AmbientVector dir = r.ambient_eigenvectors[0];
    double worst = 0.0;
    for (const auto& p : project_sample_to_pc(model, r, 0)) {
        const auto again = sphere::sphere_project_to_pc(p, r.extrinsic_mean, r.frame, dir);
        worst = std::max(worst, model.chord_distance(p, again));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("ShapeModel curves and projections")
{
    Rng rng(6);
    const auto shapes = testing::perturbed_shapes(rng, 6, 15, 0.3);
    const ShapeModel model;
    const auto r = run_epca(model, std::span<const shape::PreShape>(shapes));
    const std::vector<double> origin{0.0};
    CHECK(model.chord_distance(principal_curve_points(model, r, 0, origin)[0], r.extrinsic_mean) <= 1e-7);
    const auto projected = project_sample_to_pc(model, r, 0);
    const auto& dir = r.ambient_eigenvectors[0];
    for (const auto& p : projected) {
        const double best = curve_distance(
            [&](double t) { return model.chord_distance(p, model.curve(r.extrinsic_mean, dir, t)); },
            -std::numbers::pi / 2, std::numbers::pi / 2);
        CHECK(best <= 1e-6);
    }
}
