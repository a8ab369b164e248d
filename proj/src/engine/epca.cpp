#include "epca/engine/epca.hpp"

#include <numbers>

namespace epca {

Eigen::VectorXd explained_ratios(const Eigen::VectorXd& eigenvalues, bool* zero_variance)
{
    const double total = eigenvalues.sum();
    const bool zero = !(total > kZeroVariance);
    if (zero_variance)
        *zero_variance = zero;
    if (zero)
        return Eigen::VectorXd::Zero(eigenvalues.size());
    return eigenvalues / total;
}

std::vector<std::vector<Index>> multiplicity_grouping(const Eigen::VectorXd& eigenvalues, double tol)
{
    std::vector<std::vector<Index>> groups;
    for (Index i = 0; i < eigenvalues.size(); ++i) {
        if (i > 0 && std::abs(eigenvalues[i - 1] - eigenvalues[i]) <= tol)
            groups.back().push_back(i);
        else
            groups.push_back({i});
    }
    return groups;
}

double default_multiplicity_tolerance(const Eigen::VectorXd& eigenvalues)
{
    if (eigenvalues.size() == 0)
        return 0.0;
    const double top = eigenvalues.cwiseAbs().maxCoeff();
    if (!(top > kZeroVariance))
        return kZeroVariance;
    return 1e-9 * top;
}

std::vector<double> default_t_grid(std::size_t count)
{
    std::vector<double> t(count);
    if (count == 1) {
        t[0] = 0.0;
        return t;
    }
    const double lo = -std::numbers::pi / 2.0;
    const double step = std::numbers::pi / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        t[i] = lo + step * static_cast<double>(i);
    return t;
}

} // namespace epca
