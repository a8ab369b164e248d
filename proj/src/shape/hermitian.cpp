#include "epca/shape/hermitian.hpp"

#include "epca/core/errors.hpp"

#include <cmath>
#include <numbers>

namespace epca::shape {

template <typename Scalar>
Index SelfAdjointCoords<Scalar>::order_from_dim(Index n)
{
    Index k = 0;
    while (dim(k) < n)
        ++k;
    if (dim(k) != n)
        throw InputError("coordinate vector length " + std::to_string(n) + " does not match any matrix order");
    return k;
}

template <typename Scalar>
Eigen::VectorXd SelfAdjointCoords<Scalar>::to_coords(const Matrix& a)
{
    const Index k = a.rows();
    const Index pairs = k * (k - 1) / 2;
    Eigen::VectorXd x(dim(k));
    for (Index i = 0; i < k; ++i)
        x[i] = std::real(a(i, i));
    Index p = 0;
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j, ++p) {
            x[k + p] = std::numbers::sqrt2 * std::real(a(i, j));
            if constexpr (is_complex)
                x[k + pairs + p] = std::numbers::sqrt2 * std::imag(a(i, j));
        }
    }
    return x;
}

template <typename Scalar>
typename SelfAdjointCoords<Scalar>::Matrix SelfAdjointCoords<Scalar>::from_coords(const Eigen::VectorXd& x)
{
    const Index k = order_from_dim(x.size());
    const Index pairs = k * (k - 1) / 2;
    Matrix a = Matrix::Zero(k, k);
    for (Index i = 0; i < k; ++i)
        a(i, i) = x[i];
    Index p = 0;
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j, ++p) {
            Scalar v = x[k + p] / std::numbers::sqrt2;
            if constexpr (is_complex)
                v += Complex(0.0, x[k + pairs + p] / std::numbers::sqrt2);
            a(i, j) = v;
            if constexpr (is_complex)
                a(j, i) = std::conj(v);
            else
                a(j, i) = v;
        }
    }
    return a;
}

template struct SelfAdjointCoords<double>;
template struct SelfAdjointCoords<Complex>;

} // namespace epca::shape
