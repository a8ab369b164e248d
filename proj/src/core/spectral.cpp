#include "epca/core/spectral.hpp"

#include "epca/core/errors.hpp"

#include <Eigen/Eigenvalues>

namespace epca {

void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v)
{
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (v.size() > 0 && v[best] < 0.0)
        v = -v;
}

SpectralDecomposition spectral_decompose(const SymmetricMatrix& a)
{
    const Eigen::MatrixXd& m = a.matrix();
    if (!m.allFinite())
        throw InputError("spectral_decompose: non-finite entries");

    const Index n = m.rows();
    SpectralDecomposition out;
    if (n == 0)
        return out;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw InputError("spectral_decompose: eigen-solver did not converge");

    // Eigen returns ascending order.
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    for (Index j = 0; j < n; ++j)
        canonicalize_sign(out.eigenvectors.col(j));
    return out;
}

} // namespace epca
