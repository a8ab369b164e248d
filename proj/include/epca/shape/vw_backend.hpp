#ifndef EPCA_SHAPE_VW_BACKEND_HPP
#define EPCA_SHAPE_VW_BACKEND_HPP

#include "epca/core/backend.hpp"
#include "epca/shape/hermitian.hpp"

#include <Eigen/Core>

namespace epca::shape {

/**
 * Veronese-Whitney embedding [x] -> x x* / ‖x‖^2 of the projective space of
 * a subspace V of F^k (F = R for Scalar = double, C for Scalar = Complex),
 * working in the Hilbert-Schmidt coordinates of SelfAdjointCoords.
 *
 * V is given by an orthonormal real basis (k x r). The default is all of F^k;
 * helmert_basis(k) gives the centered subspace, i.e. planar shapes of k-ads.
 * The projection of a self-adjoint matrix H is j([m]) with m the top
 * eigenvector of H compressed to V; it exists when that eigenvalue is simple.
 */
template <typename Scalar>
class VeroneseWhitneyBackend final : public EmbeddingBackend
{
  public:
    using Coords = SelfAdjointCoords<Scalar>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit VeroneseWhitneyBackend(Index k);
    VeroneseWhitneyBackend(Index k, Eigen::MatrixXd subspace);

    Index order() const noexcept { return k_; }
    Index ambient_dim() const override { return Coords::dim(k_); }
    Index manifold_dim() const override;

    bool is_focal(const AmbientVector& x) const override;
    AmbientVector project(const AmbientVector& x) const override;
    Eigen::MatrixXd projection_differential(const AmbientVector& x) const override;
    TangentFrame tangent_frame(const AmbientVector& embedded_point) const override;

    /// Coordinates of x x* / ‖x‖^2.
    AmbientVector embed(const Vector& x) const;

  private:
    struct Eig
    {
        Eigen::VectorXd values;  // ascending
        Matrix vectors;          // lifted to F^k
    };
    Eig compressed_eigen(const AmbientVector& x) const;

    Index k_;
    Eigen::MatrixXd subspace_;
};

extern template class VeroneseWhitneyBackend<double>;
extern template class VeroneseWhitneyBackend<Complex>;

} // namespace epca::shape

#endif
