#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epca/core/errors.hpp"
#include "epca/core/spectral.hpp"
#include "epca/oracle/oracle.hpp"
#include "epca/sphere/sphere.hpp"

#include "../support/helpers.hpp"

#include <cmath>
#include <numbers>

using namespace epca;
using namespace epca::sphere;

namespace {
UnitVector uv(double x, double y, double z)
{
    return UnitVector(Eigen::Vector3d(x, y, z));
}
} // namespace

TEST_CASE("UnitVector validates its norm")
{
    CHECK_NOTHROW(uv(0, 0, 1));
    CHECK_THROWS_AS(uv(0, 0, 1.001), InputError);
    CHECK_THROWS_AS(UnitVector(AmbientVector::Ones(1)), InputError);
}

TEST_CASE("sphere_project examples")
{
    CHECK(sphere_project(Eigen::Vector3d(0, 0, 2)).coords().isApprox(Eigen::Vector3d(0, 0, 1)));
    CHECK((sphere_project(Eigen::Vector3d(3, 4, 0)).coords() - Eigen::Vector3d(0.6, 0.8, 0)).norm() <= 1e-15);
    CHECK_THROWS_AS(sphere_project(Eigen::Vector3d::Zero()), FocalPointError);
}

TEST_CASE("sphere_project is idempotent")
{
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const AmbientVector x = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
        const UnitVector p = sphere_project(x);
        CHECK((sphere_project(p.coords()).coords() - p.coords()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("sphere_extrinsic_mean examples")
{
    const SphereSample single{uv(0.6, 0.8, 0)};
    CHECK((sphere_extrinsic_mean(single).coords() - single[0].coords()).norm() <= 1e-15);

    const SphereSample antipodal{uv(1, 0, 0), uv(-1, 0, 0)};
    CHECK_THROWS_AS(sphere_extrinsic_mean(antipodal), FocalPointError);

    const SphereSample pair{uv(1, 0, 0), uv(0, 1, 0)};
    const double h = 1.0 / std::numbers::sqrt2;
    CHECK((sphere_extrinsic_mean(pair).coords() - Eigen::Vector3d(h, h, 0)).norm() <= 1e-15);
}

TEST_CASE("sphere_extrinsic_mean of {e1, e2} matches the grid minimizer of the Frechet function")
{
    const SphereSample pair{uv(1, 0, 0), uv(0, 1, 0)};
    const SphereBackend backend(2);
    const UnitVector grid =
        oracle::frechet_grid_argmin(pair, backend, oracle::GridSpec{oracle::GridKind::FibonacciSphere, 100000});
    CHECK((grid.coords() - sphere_extrinsic_mean(pair).coords()).norm() <= 1e-2);
}

TEST_CASE("sphere extrinsic mean minimizes the Frechet function over a grid")
{
    Rng rng(21);
    const SphereBackend backend(2);
    const auto sample = testing::concentrated_sample(rng, 3, 25, 0.5);
    const UnitVector mean = sphere_extrinsic_mean(sample);
    const double f_mean = oracle::frechet_value(mean, sample, backend);
    const auto grid = oracle::fibonacci_sphere(100000);
    double worst = 1e300;
    for (const auto& g : grid)
        worst = std::min(worst, oracle::frechet_value(g, sample, backend) - f_mean);
    CHECK(worst >= -1e-12);
}

TEST_CASE("sphere_projection_differential examples")
{
    const Eigen::Matrix3d p = Eigen::Matrix3d::Identity() - Eigen::Vector3d::UnitZ() * Eigen::Vector3d::UnitZ().transpose();
    CHECK((sphere_projection_differential(Eigen::Vector3d::UnitZ()).matrix() - p).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((sphere_projection_differential(2.0 * Eigen::Vector3d::UnitZ()).matrix() - p / 2.0).cwiseAbs().maxCoeff() <=
          1e-15);
    CHECK_THROWS_AS(sphere_projection_differential(Eigen::Vector3d::Zero()), FocalPointError);
}

TEST_CASE("sphere_projection_differential matches central differences and annihilates the radial direction")
{
    Rng rng(9);
    const SphereBackend backend(2);
    for (int i = 0; i < 20; ++i) {
        const AmbientVector mu = (0.3 + rng.uniform()) * testing::random_unit(rng, 3);
        const Eigen::MatrixXd closed = sphere_projection_differential(mu).matrix();
        CHECK((closed - oracle::finite_diff_dP(backend, mu, 1e-5)).cwiseAbs().maxCoeff() <= 1e-6);
        CHECK((closed * mu).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("sphere_extrinsic_covariance: identical points give the zero matrix")
{
    const SphereSample same(5, uv(0, 0.6, 0.8));
    const UnitVector mean = sphere_extrinsic_mean(same);
    const auto cov = sphere_extrinsic_covariance(same, mean, sphere_tangent_frame(mean));
    CHECK(cov.matrix().cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("sphere_extrinsic_covariance of three fixed points matches the finite-difference estimator")
{
    const SphereSample pts{uv(1, 0, 0), uv(0.8, 0.6, 0), uv(0.8, 0, 0.6)};
    const UnitVector mean = sphere_extrinsic_mean(pts);
    const TangentFrame frame = sphere_tangent_frame(mean);
    const auto closed = sphere_extrinsic_covariance(pts, mean, frame);

    const Eigen::MatrixXd x = sample_matrix(pts);
    const AmbientVector mu = x.rowwise().mean();
    const auto general = general_extrinsic_covariance(x, frame, oracle::finite_diff_dP(SphereBackend(2), mu));
    CHECK((closed.matrix() - general.matrix()).cwiseAbs().maxCoeff() <= 1e-6);

    // Frame-free reference values from an independent numpy evaluation of P S P / ‖x̄‖².
    const auto spec = spectral_decompose(closed);
    CHECK(spec.eigenvalues[0] == doctest::Approx(0.1443850267379679).epsilon(1e-12));
    CHECK(spec.eigenvalues[1] == doctest::Approx(0.057908433183677).epsilon(1e-12));
    CHECK((mean.coords() - Eigen::Vector3d(0.9506541513652699, 0.21938172723813917, 0.21938172723813917)).norm() <=
          1e-15);
}

TEST_CASE("sphere_pc_curve examples")
{
    const UnitVector mean = uv(0, 0, 1);
    const AmbientVector dir = Eigen::Vector3d(1, 0, 0);
    CHECK((sphere_pc_curve(mean, dir, 0.0).coords() - mean.coords()).norm() <= 1e-15);
    CHECK((sphere_pc_curve(mean, dir, std::numbers::pi / 2).coords() - dir).norm() <= 1e-15);
    for (double t = -3.0; t <= 3.0; t += 0.25)
        CHECK(std::abs(sphere_pc_curve(mean, dir, t).coords().norm() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(sphere_pc_curve(mean, Eigen::Vector3d(1, 0, 0.1).normalized(), 0.3), InputError);
}

TEST_CASE("sphere_project_to_pc examples")
{
    const UnitVector mean = sphere_project(Eigen::Vector3d(0.2, 0.3, 1.0));
    const TangentFrame frame = sphere_tangent_frame(mean);
    const AmbientVector dir = frame.vectors().col(0);
    const AmbientVector other = frame.vectors().col(1);

    CHECK((sphere_project_to_pc(mean, mean, frame, dir).coords() - mean.coords()).norm() <= 1e-15);

    const double s = 0.37;
    const UnitVector along = sphere_project(mean.coords() + s * dir);
    const UnitVector proj = sphere_project_to_pc(along, mean, frame, dir);
    const double s_tan = dir.dot(along.coords() - mean.coords());
    CHECK((proj.coords() - sphere_pc_curve(mean, dir, std::atan(s_tan)).coords()).norm() <= 1e-9);

    const UnitVector across = sphere_project(mean.coords() + 0.5 * other);
    CHECK((sphere_project_to_pc(across, mean, frame, dir).coords() - mean.coords()).norm() <= 1e-12);
}

TEST_CASE("rotation equivariance of mean and covariance eigenvalues")
{
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto sample = testing::concentrated_sample(rng, 3, 40, 0.3);
        const Eigen::MatrixXd r = testing::random_orthogonal(rng, 3);
        SphereSample rotated;
        for (const auto& p : sample)
            rotated.push_back(sphere_project(r * p.coords()));
        const UnitVector m = sphere_extrinsic_mean(sample);
        const UnitVector mr = sphere_extrinsic_mean(rotated);
        CHECK((mr.coords() - r * m.coords()).norm() <= 1e-10);
        const auto e = spectral_decompose(sphere_extrinsic_covariance(sample, m, sphere_tangent_frame(m))).eigenvalues;
        const auto er = spectral_decompose(sphere_extrinsic_covariance(rotated, mr, sphere_tangent_frame(mr))).eigenvalues;
        CHECK((e - er).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("SphereBackend contract")
{
    const SphereBackend backend(3);
    CHECK(backend.ambient_dim() == 4);
    CHECK(backend.manifold_dim() == 3);
    CHECK(backend.is_focal(AmbientVector::Zero(4)));
    Rng rng(2);
    const UnitVector p(testing::random_unit(rng, 4));
    CHECK((backend.project(backend.embed(p)) - backend.embed(p)).cwiseAbs().maxCoeff() <= 1e-12);
    const TangentFrame f = backend.tangent_frame(p.coords());
    CHECK(f.dim() == 3);
    CHECK((f.vectors().transpose() * p.coords()).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(backend.chord_distance(p, UnitVector(AmbientVector(-p.coords()))) == doctest::Approx(2.0));
}
