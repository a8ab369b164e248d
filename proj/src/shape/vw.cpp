#include "epca/shape/vw.hpp"

#include "epca/core/errors.hpp"
#include "epca/core/reduce.hpp"
#include "epca/core/spectral.hpp"
#include "epca/shape/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <sstream>

namespace epca::shape {
namespace {

constexpr double kDirectionTolerance = 1e-9;

void require_gap(double gap)
{
    if (!(gap > kSpectralGap)) {
        std::ostringstream os;
        os << "sample is focal for the Veronese-Whitney embedding: top eigenvalue gap " << gap
           << " <= " << kSpectralGap << ", so the extrinsic mean is not unique";
        throw FocalPointError(os.str());
    }
}

void check_direction(const PreShape& mean, const Eigen::VectorXcd& d)
{
    if (d.size() != mean.k())
        throw InputError("tangent direction has the wrong number of points");
    if (std::abs(d.norm() - 1.0) > kDirectionTolerance)
        throw InputError("tangent direction must have unit norm");
    if (std::abs(d.sum()) > kDirectionTolerance)
        throw InputError("tangent direction must be centered");
    if (std::abs(mean.z().dot(d)) > kDirectionTolerance)
        throw InputError("tangent direction is not orthogonal to the mean");
}

// Centered lift of the top eigenvector as a phase-normalized preshape.
PreShape mean_from_spectrum(const VwSpectrum& spectrum)
{
    require_gap(spectrum.top_gap());
    const Index top = spectrum.eigenvalues.size() - 1;
    return phase_normalized(PreShape::from_raw(spectrum.eigenvectors.col(top)));
}

// Rows: per-sample tangent coordinates in input order.
Eigen::MatrixXd frame_coordinates(const Eigen::MatrixXcd& z, const VwTangentFrame& frame)
{
    // (d_j* z_i) for all j, i, and (z_i* m) for all i.
    const Eigen::MatrixXcd dz = frame.directions().adjoint() * z;
    const Eigen::VectorXcd zm = z.adjoint() * frame.mean().z();
    Eigen::MatrixXd out(z.cols(), frame.dim());
    for (Index i = 0; i < z.cols(); ++i) {
        for (Index j = 0; j < frame.dim(); ++j)
            out(i, j) = std::numbers::sqrt2 * std::real(dz(j, i) * zm[i]);
    }
    return out;
}

} // namespace

VWMatrix::VWMatrix(Eigen::MatrixXcd h) : h_(std::move(h))
{
    if (h_.rows() != h_.cols())
        throw InputError("VW matrix must be square");
    if ((h_ - h_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw InputError("VW matrix is not Hermitian");
    if (std::abs(h_.trace() - Complex(1.0, 0.0)) > 1e-10)
        throw InputError("VW matrix must have unit trace");
}

VWMatrix vw_embed(const PreShape& p)
{
    Eigen::MatrixXcd h = p.z() * p.z().adjoint();
    // Exact Hermitian symmetry and real diagonal.
    h = 0.5 * (h + h.adjoint()).eval();
    return VWMatrix(std::move(h));
}

double VwSpectrum::top_gap() const
{
    const Index n = eigenvalues.size();
    if (n < 2)
        return 0.0;
    return eigenvalues[n - 1] - eigenvalues[n - 2];
}

VwSpectrum vw_spectrum(std::span<const PreShape> sample)
{
    const Eigen::MatrixXcd z = preshape_matrix(sample);
    const Index k = z.rows();
    const Index n = z.cols();
    const std::vector<Index> order = canonical_order(z);

    const Eigen::MatrixXd basis = helmert_basis(k);
    Eigen::MatrixXcd y(k - 1, n);
    for (Index i = 0; i < n; ++i)
        y.col(i) = basis.transpose() * z.col(order[static_cast<std::size_t>(i)]);
    Eigen::MatrixXcd kc = y * y.adjoint() / static_cast<double>(n);
    kc = 0.5 * (kc + kc.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(kc, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw InputError("vw_spectrum: eigen-solver did not converge");

    VwSpectrum out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = basis.cast<Complex>() * solver.eigenvectors();
    return out;
}

PreShape vw_mean(std::span<const PreShape> sample)
{
    return vw_mean(vw_spectrum(sample));
}

PreShape vw_mean(const VwSpectrum& spectrum)
{
    return mean_from_spectrum(spectrum);
}

VwTangentFrame::VwTangentFrame(PreShape mean, const Eigen::MatrixXcd& basis) : mean_(std::move(mean))
{
    const Index k = mean_.k();
    if (basis.rows() != k || basis.cols() != k - 2)
        throw InputError("VW tangent basis must be k x (k - 2)");
    const Eigen::MatrixXcd gram = basis.adjoint() * basis;
    if ((gram - Eigen::MatrixXcd::Identity(k - 2, k - 2)).cwiseAbs().maxCoeff() > kUnitTolerance)
        throw InputError("VW tangent basis is not orthonormal");
    if (basis.colwise().sum().cwiseAbs().maxCoeff() > kUnitTolerance)
        throw InputError("VW tangent basis is not centered");
    if ((basis.adjoint() * mean_.z()).cwiseAbs().maxCoeff() > kUnitTolerance)
        throw InputError("VW tangent basis is not orthogonal to the mean");

    directions_.resize(k, 2 * (k - 2));
    for (Index a = 0; a < k - 2; ++a) {
        directions_.col(2 * a) = basis.col(a);
        directions_.col(2 * a + 1) = Complex(0.0, 1.0) * basis.col(a);
    }
}

Eigen::VectorXcd VwTangentFrame::push_forward(const Eigen::VectorXd& coords) const
{
    if (coords.size() != dim())
        throw InputError("VW push_forward: expected " + std::to_string(dim()) + " coordinates");
    return directions_ * coords.cast<Complex>();
}

Eigen::MatrixXcd VwTangentFrame::ambient_vector(Index j) const
{
    const Eigen::VectorXcd& m = mean_.z();
    const Eigen::VectorXcd d = directions_.col(j);
    return (d * m.adjoint() + m * d.adjoint()) / std::numbers::sqrt2;
}

TangentFrame VwTangentFrame::ambient_frame() const
{
    using Coords = SelfAdjointCoords<Complex>;
    const Index k = mean_.k();
    Eigen::MatrixXd vectors(Coords::dim(k), dim());
    for (Index j = 0; j < dim(); ++j)
        vectors.col(j) = Coords::to_coords(ambient_vector(j));
    const Eigen::MatrixXcd base = mean_.z() * mean_.z().adjoint();
    return TangentFrame(Coords::to_coords(base), std::move(vectors));
}

Eigen::VectorXd VwTangentFrame::coordinates(const PreShape& x) const
{
    if (x.k() != mean_.k())
        throw InputError("VW coordinates: preshape has the wrong number of points");
    return frame_coordinates(x.z(), *this).row(0).transpose();
}

VwTangentFrame vw_tangent_frame(const PreShape& mean)
{
    const Index k = mean.k();
    const Eigen::MatrixXd basis = helmert_basis(k);
    const Eigen::VectorXcd v = basis.transpose() * mean.z();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr{Eigen::MatrixXcd(v)};
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(k - 1, k - 1);
    return VwTangentFrame(mean, basis.cast<Complex>() * q.rightCols(k - 2));
}

VwTangentFrame vw_tangent_frame(const VwSpectrum& spectrum)
{
    PreShape mean = mean_from_spectrum(spectrum);
    const Index rest = spectrum.eigenvectors.cols() - 1;
    return VwTangentFrame(std::move(mean), spectrum.eigenvectors.leftCols(rest).rowwise().reverse());
}

Eigen::MatrixXd vw_scores(std::span<const PreShape> sample, const VwTangentFrame& frame)
{
    const Eigen::MatrixXcd z = preshape_matrix(sample);
    if (z.rows() != frame.mean().k())
        throw InputError("vw_scores: sample and frame differ in number of points");
    return frame_coordinates(z, frame);
}

ShapeCovariance vw_extrinsic_covariance(std::span<const PreShape> sample)
{
    return detail::vw_extrinsic_covariance(sample, 1.0);
}

ShapeCovariance detail::vw_extrinsic_covariance(std::span<const PreShape> sample, double imaginary_sign)
{
    const VwSpectrum spectrum = vw_spectrum(sample);
    VwTangentFrame frame = vw_tangent_frame(spectrum);

    const Eigen::MatrixXcd z = preshape_matrix(sample);
    const std::vector<Index> order = canonical_order(z);
    Eigen::MatrixXcd ordered(z.rows(), z.cols());
    for (Index i = 0; i < z.cols(); ++i)
        ordered.col(i) = z.col(order[static_cast<std::size_t>(i)]);

    // Frame direction pair a uses eigenvalue index (k - 3 - a) in ascending order.
    const Index top = spectrum.eigenvalues.size() - 1;
    Eigen::MatrixXd u = frame_coordinates(ordered, frame);
    for (Index j = 0; j < frame.dim(); ++j) {
        const Index a = j / 2;
        const double gap = spectrum.eigenvalues[top] - spectrum.eigenvalues[top - 1 - a];
        u.col(j) /= gap;
        if (j % 2 == 1)
            u.col(j) *= imaginary_sign;
    }
    const double n = static_cast<double>(u.rows());
    const Eigen::RowVectorXd mean = u.colwise().sum() / n;
    u.rowwise() -= mean;
    return ShapeCovariance{SymmetricMatrix(u.transpose() * u / n), std::move(frame)};
}

PreShape shape_pc_curve(const PreShape& mean, const Eigen::VectorXcd& direction, double t)
{
    check_direction(mean, direction);
    return PreShape::from_raw(std::cos(t) * mean.z() + std::sin(t) * direction);
}

PreShape shape_project_score(const PreShape& mean, const Eigen::VectorXcd& direction, double s)
{
    check_direction(mean, direction);
    // j(mean) + s (d m* + m d*) / sqrt(2) restricted to span{m, d}.
    Eigen::Matrix2d h;
    h << 1.0, s / std::numbers::sqrt2, s / std::numbers::sqrt2, 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h);
    Eigen::Vector2d top = solver.eigenvectors().col(1);
    if (top[0] < 0.0)
        top = -top;
    return PreShape::from_raw(top[0] * mean.z() + top[1] * direction);
}

PreShape shape_project_to_pc(const PreShape& x, const PreShape& mean, const Eigen::VectorXcd& direction)
{
    check_direction(mean, direction);
    if (x.k() != mean.k())
        throw InputError("shape_project_to_pc: preshape has the wrong number of points");
    const Complex dx = direction.dot(x.z());
    const Complex xm = x.z().dot(mean.z());
    const double s = std::numbers::sqrt2 * std::real(dx * xm);
    return shape_project_score(mean, direction, s);
}

TangentFrame PrenticeCovariance::frame() const
{
    using Coords = SelfAdjointCoords<double>;
    const Index n_dim = eigenvectors.rows();
    const Eigen::VectorXd m = eigenvectors.col(n_dim - 1);
    Eigen::MatrixXd vectors(Coords::dim(n_dim), n_dim - 1);
    for (Index a = 0; a + 1 < n_dim; ++a) {
        const Eigen::VectorXd ma = eigenvectors.col(a);
        vectors.col(a) = Coords::to_coords((ma * m.transpose() + m * ma.transpose()) / std::numbers::sqrt2);
    }
    return TangentFrame(Coords::to_coords(m * m.transpose()), std::move(vectors));
}

PrenticeCovariance prentice_covariance(const Eigen::MatrixXd& x)
{
    const Index n_dim = x.rows();
    const Index n = x.cols();
    if (n_dim < 2 || n < 1)
        throw InputError("prentice_covariance: need N >= 2 and at least one sample");
    for (Index i = 0; i < n; ++i) {
        if (std::abs(x.col(i).norm() - 1.0) > kUnitTolerance)
            throw InputError("prentice_covariance: samples must be unit vectors");
    }

    const std::vector<Index> order = canonical_order(x);
    Eigen::MatrixXd ordered(n_dim, n);
    for (Index i = 0; i < n; ++i)
        ordered.col(i) = x.col(order[static_cast<std::size_t>(i)]);
    const Eigen::MatrixXd k = ordered * ordered.transpose() / static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (k + k.transpose()), Eigen::ComputeEigenvectors);
    PrenticeCovariance out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    for (Index a = 0; a < n_dim; ++a)
        canonicalize_sign(out.eigenvectors.col(a));
    const double eta_top = out.eigenvalues[n_dim - 1];
    require_gap(eta_top - out.eigenvalues[n_dim - 2]);

    // Row i: (m_a . x_i) for all a.
    const Eigen::MatrixXd proj = ordered.transpose() * out.eigenvectors;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n_dim - 1, n_dim - 1);
    for (Index a = 0; a + 1 < n_dim; ++a) {
        for (Index b = 0; b + 1 < n_dim; ++b) {
            double sum = 0.0;
            for (Index i = 0; i < n; ++i) {
                const double top = proj(i, n_dim - 1);
                sum += proj(i, a) * proj(i, b) * top * top;
            }
            s(a, b) = sum / (static_cast<double>(n) * (eta_top - out.eigenvalues[a]) * (eta_top - out.eigenvalues[b]));
        }
    }
    out.covariance = SymmetricMatrix(s);
    return out;
}

} // namespace epca::shape
