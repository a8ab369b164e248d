#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epca/core/errors.hpp"
#include "epca/core/frame.hpp"
#include "epca/core/reduce.hpp"
#include "epca/core/rng.hpp"
#include "epca/core/spectral.hpp"
#include "epca/core/types.hpp"

#include "../support/helpers.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <limits>

using namespace epca;

TEST_CASE("SymmetricMatrix symmetrizes and rejects bad input")
{
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 2.0, 2.0 + 1e-13, 3.0;
    const SymmetricMatrix s(a);
    CHECK((s.matrix() - s.matrix().transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(s(0, 1) == doctest::Approx(2.0));

    CHECK_THROWS_AS(SymmetricMatrix(Eigen::MatrixXd(2, 3)), InputError);
    a(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(SymmetricMatrix{a}, InputError);
}

TEST_CASE("spectral_decompose: identity has a double eigenvalue 1")
{
    const auto d = spectral_decompose(SymmetricMatrix(Eigen::MatrixXd::Identity(2, 2)));
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("spectral_decompose: published covariance of the sphere example")
{
    Eigen::MatrixXd c(2, 2);
    c << 0.0045, -0.0010, -0.0010, 0.0305;
    const auto d = spectral_decompose(SymmetricMatrix(c));
    CHECK(std::abs(d.eigenvalues[0] - 0.0305) <= 5e-4);
    CHECK(std::abs(d.eigenvalues[1] - 0.0045) <= 5e-4);
}

TEST_CASE("spectral_decompose: rank one vv^T with v = (3, 4)")
{
    const Eigen::Vector2d v(3.0, 4.0);
    const auto d = spectral_decompose(SymmetricMatrix(v * v.transpose()));
    CHECK(d.eigenvalues[0] == doctest::Approx(25.0));
    CHECK(std::abs(d.eigenvalues[1]) <= 1e-12);
    CHECK(d.eigenvectors(0, 0) == doctest::Approx(0.6));
    CHECK(d.eigenvectors(1, 0) == doctest::Approx(0.8));
}

TEST_CASE("spectral_decompose invariants on random matrices")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 2 + trial % 6;
        Eigen::MatrixXd a(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                a(i, j) = rng.normal();
        const SymmetricMatrix s(a);
        const auto d = spectral_decompose(s);
        const double scale = std::max(1.0, s.matrix().norm());
        for (Index i = 0; i + 1 < n; ++i)
            CHECK(d.eigenvalues[i] >= d.eigenvalues[i + 1]);
        for (Index i = 0; i < n; ++i) {
            CHECK((s.matrix() * d.eigenvectors.col(i) - d.eigenvalues[i] * d.eigenvectors.col(i)).norm() <=
                  1e-9 * scale);
            Index arg = 0;
            d.eigenvectors.col(i).cwiseAbs().maxCoeff(&arg);
            CHECK(d.eigenvectors(arg, i) >= 0.0);
        }
        CHECK((d.eigenvectors.transpose() * d.eigenvectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <=
              1e-10);
        const Eigen::MatrixXd rebuilt = d.eigenvectors * d.eigenvalues.asDiagonal() * d.eigenvectors.transpose();
        CHECK((rebuilt - s.matrix()).norm() <= 1e-9 * scale);
    }
}

TEST_CASE("canonicalize_sign breaks ties by lowest index")
{
    Eigen::VectorXd v(3);
    v << -1.0, 1.0, 0.5;
    canonicalize_sign(v);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == -1.0);
}

TEST_CASE("complete_orthonormal_frame: e3 gives a frame of span{e1, e2}")
{
    const Eigen::MatrixXd f = complete_orthonormal_frame(Eigen::Vector3d::UnitZ());
    REQUIRE(f.cols() == 2);
    Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
    expected(0, 0) = expected(1, 1) = 1.0;
    CHECK(testing::projector_distance(f * f.transpose(), expected) <= 1e-12);
}

TEST_CASE("complete_orthonormal_frame: orthonormal, orthogonal to u, completes to an orthogonal matrix")
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Index n = 2 + trial % 6;
        const AmbientVector u = testing::random_unit(rng, n);
        const Eigen::MatrixXd f = complete_orthonormal_frame(u);
        CHECK((f.transpose() * f - Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((f.transpose() * u).cwiseAbs().maxCoeff() <= 1e-10);
        Eigen::MatrixXd full(n, n);
        full << f, u;
        CHECK(std::abs(std::abs(full.determinant()) - 1.0) <= 1e-9);
    }
    CHECK(complete_orthonormal_frame(AmbientVector::Unit(3, 2)).isApprox(
        complete_orthonormal_frame(AmbientVector::Unit(3, 2))));
}

TEST_CASE("complete_orthonormal_frame rejects a non-unit vector")
{
    CHECK_THROWS_AS(complete_orthonormal_frame(Eigen::Vector3d(1.0, 1.0, 0.0)), InputError);
}

// Published reference frame vs ours: projectors onto the tangent plane at the published mean.
// The published f1 is 1.5e-3 away from orthogonal to the published mean, so the
// projectors differ by about 1.4e-3 and the 1e-3 target is out of reach.
TEST_CASE("complete_orthonormal_frame spans the published reference frame" * doctest::should_fail())
{
    AmbientVector u(3);
    u << 0.2153, 0.8692, 0.4461;
    u /= u.norm();
    const Eigen::MatrixXd f = complete_orthonormal_frame(u);
    Eigen::MatrixXd published(3, 2);
    published << -0.8692, -0.4461, 0.3775, -0.3195, -0.3195, 0.8360;
    CHECK(testing::projector_distance(f * f.transpose(), published * published.transpose()) <= 1e-3);
}

TEST_CASE("complete_orthonormal_frame spans the tangent plane at the published reference mean")
{
    AmbientVector u(3);
    u << 0.2153, 0.8692, 0.4461;
    u /= u.norm();
    const Eigen::MatrixXd f = complete_orthonormal_frame(u);
    const Eigen::MatrixXd tangent_projector = Eigen::Matrix3d::Identity() - u * u.transpose();
    CHECK(testing::projector_distance(f * f.transpose(), tangent_projector) <= 1e-12);
}

TEST_CASE("TangentFrame validates orthonormality")
{
    Eigen::MatrixXd v(3, 2);
    v << 1, 0, 0, 1, 0, 0;
    CHECK_NOTHROW(TangentFrame(Eigen::Vector3d::UnitZ(), v));
    v(0, 1) = 0.1;
    CHECK_THROWS_AS(TangentFrame(Eigen::Vector3d::UnitZ(), v), InputError);
}

TEST_CASE("tangential_component examples and linearity")
{
    const AmbientVector base = Eigen::Vector3d::UnitZ();
    const TangentFrame frame(base, complete_orthonormal_frame(base));
    CHECK(tangential_component(base, frame).norm() <= 1e-15);
    const Eigen::VectorXd e1 = tangential_component(frame.vectors().col(0), frame);
    CHECK(e1[0] == doctest::Approx(1.0));
    CHECK(std::abs(e1[1]) <= 1e-15);
    CHECK_THROWS_AS(tangential_component(Eigen::Vector2d(1, 0), frame), InputError);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const AmbientVector v = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
        const AmbientVector w = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
        const double a = rng.normal();
        const double b = rng.normal();
        CHECK(tangential_component(v, frame).norm() <= v.norm() + 1e-15);
        const Eigen::VectorXd lhs = tangential_component(a * v + b * w, frame);
        const Eigen::VectorXd rhs = a * tangential_component(v, frame) + b * tangential_component(w, frame);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("pairwise_column_sum is order-determined and accurate")
{
    Rng rng(8);
    Eigen::MatrixXd cols(3, 101);
    for (Index j = 0; j < cols.cols(); ++j)
        for (Index i = 0; i < 3; ++i)
            cols(i, j) = rng.normal();
    const auto order = canonical_order(cols);
    const Eigen::VectorXd s = pairwise_column_sum(cols, order);
    CHECK((s - cols.rowwise().sum()).cwiseAbs().maxCoeff() <= 1e-12);

    Eigen::MatrixXd shuffled(3, 101);
    for (Index j = 0; j < 101; ++j)
        shuffled.col(j) = cols.col((j * 37) % 101);
    const Eigen::VectorXd s2 = pairwise_column_sum(shuffled, canonical_order(shuffled));
    CHECK(s2 == s);
}

TEST_CASE("parallel_for visits each index once and rethrows worker exceptions")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits)
        CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 7)
                            throw InputError("boom");
                    }),
                    InputError);
}

TEST_CASE("Rng streams are reproducible and distinct")
{
    Rng a(42, 3);
    Rng b(42, 3);
    Rng c(42, 4);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.normal();
        CHECK(x == b.normal());
        differs = differs || x != c.normal();
    }
    CHECK(differs);
    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("Rng normal moments")
{
    Rng rng(2024);
    double sum = 0.0;
    double sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) <= 0.01);
    CHECK(std::abs(sum2 / n - 1.0) <= 0.02);
}
