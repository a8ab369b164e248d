#include "epca/shape/vw_backend.hpp"

#include "epca/core/errors.hpp"
#include "epca/shape/vw.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <sstream>

namespace epca::shape {

template <typename Scalar>
VeroneseWhitneyBackend<Scalar>::VeroneseWhitneyBackend(Index k)
  : VeroneseWhitneyBackend(k, Eigen::MatrixXd::Identity(k, k))
{}

template <typename Scalar>
VeroneseWhitneyBackend<Scalar>::VeroneseWhitneyBackend(Index k, Eigen::MatrixXd subspace)
  : k_(k), subspace_(std::move(subspace))
{
    if (k < 2 || subspace_.rows() != k || subspace_.cols() < 2)
        throw InputError("VW backend: need k >= 2 and a k x r subspace basis with r >= 2");
    const Index r = subspace_.cols();
    if ((subspace_.transpose() * subspace_ - Eigen::MatrixXd::Identity(r, r)).cwiseAbs().maxCoeff() > 1e-12)
        throw InputError("VW backend: subspace basis is not orthonormal");
}

template <typename Scalar>
Index VeroneseWhitneyBackend<Scalar>::manifold_dim() const
{
    const Index r = subspace_.cols();
    return Coords::is_complex ? 2 * (r - 1) : r - 1;
}

template <typename Scalar>
typename VeroneseWhitneyBackend<Scalar>::Eig VeroneseWhitneyBackend<Scalar>::compressed_eigen(const AmbientVector& x) const
{
    if (x.size() != ambient_dim())
        throw InputError("VW backend: ambient dimension mismatch");
    const Matrix h = Coords::from_coords(x);
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> b = subspace_.cast<Scalar>();
    Matrix hc = b.adjoint() * h * b;
    hc = (0.5 * (hc + hc.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hc, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw InputError("VW backend: eigen-solver did not converge");
    return Eig{solver.eigenvalues(), b * solver.eigenvectors()};
}

template <typename Scalar>
bool VeroneseWhitneyBackend<Scalar>::is_focal(const AmbientVector& x) const
{
    const Eig e = compressed_eigen(x);
    const Index r = e.values.size();
    return !(e.values[r - 1] - e.values[r - 2] > kSpectralGap);
}

template <typename Scalar>
AmbientVector VeroneseWhitneyBackend<Scalar>::project(const AmbientVector& x) const
{
    const Eig e = compressed_eigen(x);
    const Index r = e.values.size();
    const double gap = e.values[r - 1] - e.values[r - 2];
    if (!(gap > kSpectralGap)) {
        std::ostringstream os;
        os << "VW projection undefined: top eigenvalue gap " << gap << " <= " << kSpectralGap;
        throw FocalPointError(os.str());
    }
    const Vector m = e.vectors.col(r - 1);
    return Coords::to_coords(m * m.adjoint());
}

template <typename Scalar>
Eigen::MatrixXd VeroneseWhitneyBackend<Scalar>::projection_differential(const AmbientVector& x) const
{
    const Eig e = compressed_eigen(x);
    const Index r = e.values.size();
    const double top = e.values[r - 1];
    if (!(top - e.values[r - 2] > kSpectralGap))
        throw FocalPointError("VW projection differential undefined at a focal point");
    const Vector m = e.vectors.col(r - 1);

    // First-order change of the top eigenvector under H -> H + G:
    // dm = sum_a (m_a* G m) / (eta_top - eta_a) m_a, and dP(G) = dm m* + m dm*.
    const Index n = ambient_dim();
    Eigen::MatrixXd d(n, n);
    for (Index b = 0; b < n; ++b) {
        const Matrix g = Coords::from_coords(Eigen::VectorXd::Unit(n, b));
        const Vector gm = g * m;
        Vector dm = Vector::Zero(k_);
        for (Index a = 0; a + 1 < r; ++a)
            dm += (e.vectors.col(a).dot(gm) / (top - e.values[a])) * e.vectors.col(a);
        d.col(b) = Coords::to_coords(dm * m.adjoint() + m * dm.adjoint());
    }
    return d;
}

template <typename Scalar>
TangentFrame VeroneseWhitneyBackend<Scalar>::tangent_frame(const AmbientVector& embedded_point) const
{
    const Eig e = compressed_eigen(embedded_point);
    const Index r = e.values.size();
    const Vector m = e.vectors.col(r - 1);

    // Orthonormal complement of m inside the subspace, by Householder QR.
    const Vector v = subspace_.cast<Scalar>().adjoint() * m;
    Eigen::HouseholderQR<Matrix> qr{Matrix(v)};
    const Matrix q = qr.householderQ() * Matrix::Identity(r, r);
    const Matrix complement = subspace_.cast<Scalar>() * q.rightCols(r - 1);

    Eigen::MatrixXd vectors(ambient_dim(), manifold_dim());
    Index col = 0;
    for (Index a = 0; a < r - 1; ++a) {
        const Vector u = complement.col(a);
        vectors.col(col++) = Coords::to_coords((u * m.adjoint() + m * u.adjoint()) / std::numbers::sqrt2);
        if constexpr (Coords::is_complex) {
            const Vector iu = Complex(0.0, 1.0) * u;
            vectors.col(col++) = Coords::to_coords((iu * m.adjoint() + m * iu.adjoint()) / std::numbers::sqrt2);
        }
    }
    return TangentFrame(Coords::to_coords(m * m.adjoint()), std::move(vectors));
}

template <typename Scalar>
AmbientVector VeroneseWhitneyBackend<Scalar>::embed(const Vector& x) const
{
    if (x.size() != k_)
        throw InputError("VW embed: vector has the wrong length");
    const double n2 = x.squaredNorm();
    if (!(n2 > 0.0))
        throw InputError("VW embed: zero vector has no projective class");
    return Coords::to_coords(x * x.adjoint() / n2);
}

template class VeroneseWhitneyBackend<double>;
template class VeroneseWhitneyBackend<Complex>;

} // namespace epca::shape
