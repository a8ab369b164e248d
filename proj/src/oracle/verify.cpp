#include "epca/oracle/verify.hpp"

#include "epca/core/frame.hpp"
#include "epca/core/rng.hpp"
#include "epca/oracle/oracle.hpp"
#include "epca/shape/hermitian.hpp"
#include "epca/shape/vw.hpp"
#include "epca/shape/vw_backend.hpp"
#include "epca/sphere/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace epca::oracle {

double relative_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    return (a - b).norm() / std::max(b.norm(), 1e-300);
}

namespace {

VerifyRow row(std::string name, double residual, double tolerance)
{
    return VerifyRow{std::move(name), residual, tolerance, residual <= tolerance};
}

AmbientVector random_unit(Rng& rng, Index n)
{
    AmbientVector v(n);
    for (Index i = 0; i < n; ++i)
        v[i] = rng.normal();
    return v / v.norm();
}

sphere::SphereSample concentrated_sphere_sample(Rng& rng, Index dim, std::size_t n, double spread)
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

std::vector<VerifyRow> verify_sphere(std::uint64_t seed, bool inject_fault)
{
    std::vector<VerifyRow> rows;
    Rng rng(seed, 0);

    {
        const sphere::SphereBackend backend(2);
        const auto sample = concentrated_sphere_sample(rng, 3, 30, 0.4);
        const sphere::UnitVector mean = sphere::sphere_extrinsic_mean(sample);
        const sphere::UnitVector grid = frechet_grid_argmin(sample, backend, GridSpec{GridKind::FibonacciSphere, 200000});
        rows.push_back(row("sphere mean vs Frechet grid argmin (chord)",
                           (mean.coords() - grid.coords()).norm(), 2e-2));
    }
    {
        const sphere::SphereBackend backend(3);
        const AmbientVector mu = 0.7 * random_unit(rng, 4);
        rows.push_back(row("sphere dP closed form vs central differences",
                           (backend.projection_differential(mu) - finite_diff_dP(backend, mu)).cwiseAbs().maxCoeff(),
                           1e-6));
    }
    {
        const sphere::SphereBackend backend(2);
        const auto sample = concentrated_sphere_sample(rng, 3, 10, 0.5);
        const sphere::UnitVector mean = sphere::sphere_extrinsic_mean(sample);
        const TangentFrame frame = sphere::sphere_tangent_frame(mean);
        Eigen::MatrixXd closed = sphere::sphere_extrinsic_covariance(sample, mean, frame).matrix();
        if (inject_fault) {
            for (Index a = 0; a < closed.rows(); ++a)
                for (Index b = 0; b < closed.cols(); ++b)
                    if (a != b)
                        closed(a, b) = -closed(a, b);
        }
        const Eigen::MatrixXd embedded = sphere::sample_matrix(sample);
        const AmbientVector mu = embedded.rowwise().mean();
        const Eigen::MatrixXd general =
            general_extrinsic_covariance(embedded, frame, finite_diff_dP(backend, mu)).matrix();
        rows.push_back(row("sphere covariance closed form vs general estimator (relative)",
                           relative_error(closed, general), 1e-6));
    }
    return rows;
}

std::vector<shape::PreShape> perturbed_shapes(Rng& rng, Index k, std::size_t n, double spread)
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

std::vector<VerifyRow> verify_shape(std::uint64_t seed, bool inject_fault)
{
    std::vector<VerifyRow> rows;
    Rng rng(seed, 1);

    {
        const shape::VeroneseWhitneyBackend<Complex> backend(3, shape::helmert_basis(3));
        const auto sample = perturbed_shapes(rng, 3, 20, 0.3);
        const shape::PreShape mean = shape::vw_mean(sample);
        const shape::PreShape grid = frechet_grid_argmin(sample, backend, GridSpec{GridKind::UniformCP1, 300});
        rows.push_back(row("VW mean of triangles vs CP1 grid argmin (chord)", shape::shape_chord_distance(mean, grid),
                           2e-2));
    }
    {
        const Index n_dim = 4;
        const shape::VeroneseWhitneyBackend<double> backend(n_dim);
        const AmbientVector centre = random_unit(rng, n_dim);
        Eigen::MatrixXd x(n_dim, 8);
        for (Index i = 0; i < x.cols(); ++i) {
            AmbientVector v = centre;
            for (Index a = 0; a < n_dim; ++a)
                v[a] += 0.4 * rng.normal();
            if (rng.uniform() < 0.5)
                v = -v;
            x.col(i) = v / v.norm();
        }
        const shape::PrenticeCovariance pc = shape::prentice_covariance(x);
        Eigen::MatrixXd embedded(backend.ambient_dim(), x.cols());
        for (Index i = 0; i < x.cols(); ++i)
            embedded.col(i) = backend.embed(x.col(i));
        const AmbientVector mu = embedded.rowwise().mean();
        const Eigen::MatrixXd general =
            general_extrinsic_covariance(embedded, pc.frame(), finite_diff_dP(backend, mu)).matrix();
        rows.push_back(row("real Prentice covariance (x2, orthonormal frame) vs general estimator (relative)",
                           relative_error(2.0 * pc.covariance.matrix(), general), 1e-6));
    }
    {
        const Index k = 5;
        const shape::VeroneseWhitneyBackend<Complex> backend(k, shape::helmert_basis(k));
        const auto sample = perturbed_shapes(rng, k, 10, 0.3);
        const shape::ShapeCovariance closed =
            shape::detail::vw_extrinsic_covariance(sample, inject_fault ? -1.0 : 1.0);
        Eigen::MatrixXd embedded(backend.ambient_dim(), static_cast<Index>(sample.size()));
        for (std::size_t i = 0; i < sample.size(); ++i)
            embedded.col(static_cast<Index>(i)) = backend.embed(sample[i].z());
        const AmbientVector mu = embedded.rowwise().mean();
        const Eigen::MatrixXd general =
            general_extrinsic_covariance(embedded, closed.frame.ambient_frame(), finite_diff_dP(backend, mu)).matrix();
        rows.push_back(row("complex VW covariance vs general estimator (relative)",
                           relative_error(closed.s.matrix(), general), 1e-6));
    }
    {
        using Coords = shape::SelfAdjointCoords<double>;
        const Index n_dim = 5;
        const shape::VeroneseWhitneyBackend<double> backend(n_dim);
        Eigen::VectorXd eta(n_dim);
        for (Index a = 0; a < n_dim; ++a)
            eta[a] = rng.uniform(0.0, 1.0);
        std::sort(eta.data(), eta.data() + n_dim);
        eta[n_dim - 1] += 0.2;
        eta /= eta.sum();
        const AmbientVector d = Coords::to_coords(eta.asDiagonal().toDenseMatrix());
        const Eigen::MatrixXd fd = finite_diff_dP(backend, d);
        double worst = 0.0;
        for (Index a = 0; a < n_dim; ++a) {
            for (Index b = a + 1; b < n_dim; ++b) {
                Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n_dim, n_dim);
                f(a, b) = f(b, a) = 1.0 / std::numbers::sqrt2;
                const AmbientVector fa = Coords::to_coords(f);
                const AmbientVector expected =
                    b == n_dim - 1 ? AmbientVector(fa / (eta[n_dim - 1] - eta[a])) : AmbientVector::Zero(fa.size());
                worst = std::max(worst, (fd * fa - expected).cwiseAbs().maxCoeff());
            }
        }
        rows.push_back(row("dP(F^b_a) = delta_bN F^N_a / (eta_N - eta_a) at diagonal D", worst, 1e-5));
    }
    return rows;
}

} // namespace

std::vector<VerifyRow> run_verification(VerifyBackend backend, std::uint64_t seed, bool inject_fault)
{
    return backend == VerifyBackend::Sphere ? verify_sphere(seed, inject_fault) : verify_shape(seed, inject_fault);
}

} // namespace epca::oracle
