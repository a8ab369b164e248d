#ifndef EPCA_CORE_TYPES_HPP
#define EPCA_CORE_TYPES_HPP

#include <Eigen/Core>

#include <complex>

namespace epca {

using Index = Eigen::Index;
using Complex = std::complex<double>;

/// A point of R^N. The ambient dimension is fixed per dataset, not per type.
using AmbientVector = Eigen::VectorXd;

/// Symmetric real matrix, symmetrized on construction.
class SymmetricMatrix
{
  public:
    SymmetricMatrix() = default;

    /// Throws InputError when `a` is not square or has non-finite entries.
    explicit SymmetricMatrix(const Eigen::MatrixXd& a);

    static SymmetricMatrix zero(Index n) { return SymmetricMatrix(Eigen::MatrixXd::Zero(n, n)); }

    Index size() const noexcept { return entries_.rows(); }
    const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
    double operator()(Index i, Index j) const { return entries_(i, j); }
    double trace() const { return entries_.trace(); }

  private:
    Eigen::MatrixXd entries_;
};

} // namespace epca

#endif
