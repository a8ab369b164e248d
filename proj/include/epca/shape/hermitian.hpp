#ifndef EPCA_SHAPE_HERMITIAN_HPP
#define EPCA_SHAPE_HERMITIAN_HPP

#include "epca/core/types.hpp"

#include <Eigen/Core>

#include <type_traits>

namespace epca::shape {

/**
 * Isometric coordinates for self-adjoint k x k matrices under the
 * Hilbert-Schmidt inner product <A, B> = Re tr(A B*).
 *
 * Coordinate order: the k diagonal entries, then sqrt(2) Re A(a,b) for every
 * a < b in row-major order, then (complex case only) sqrt(2) Im A(a,b) in the
 * same order. Real symmetric matrices use k (k + 1) / 2 coordinates,
 * Hermitian ones k^2.
 */
template <typename Scalar>
struct SelfAdjointCoords
{
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    static constexpr bool is_complex = !std::is_same_v<Scalar, double>;

    static Index dim(Index k) { return is_complex ? k * k : k * (k + 1) / 2; }

    static Index order_from_dim(Index n);

    static Eigen::VectorXd to_coords(const Matrix& a);
    static Matrix from_coords(const Eigen::VectorXd& x);
};

extern template struct SelfAdjointCoords<double>;
extern template struct SelfAdjointCoords<Complex>;

} // namespace epca::shape

#endif
