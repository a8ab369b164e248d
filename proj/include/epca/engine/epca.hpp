#ifndef EPCA_ENGINE_EPCA_HPP
#define EPCA_ENGINE_EPCA_HPP

#include "epca/core/errors.hpp"
#include "epca/core/spectral.hpp"
#include "epca/core/types.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <vector>

namespace epca {

/// Total variance at or below this is reported as zero spread.
inline constexpr double kZeroVariance = 1e-24;

/// What a backend model hands back after one pass over the sample.
template <typename Point, typename Frame>
struct ModelFit
{
    Point mean;
    Frame frame;
    SymmetricMatrix covariance;
    Eigen::MatrixXd scores;  // n x m, rows in sample order
};

/**
 * Backend model for the extrinsic PCA pipeline.
 *
 *  - fit: extrinsic mean, tangent frame there, extrinsic covariance in frame
 *    coordinates, and per-sample tangential components of j(x_i) - j(mean).
 *  - push_forward: frame coordinates -> tangent direction at the mean.
 *  - curve: the principal curve through the mean along a unit direction.
 *  - project_score: the point of that curve reached by re-projecting
 *    j(mean) + s * direction.
 */
template <typename M>
concept EpcaModel = requires(const M& model,
                             std::span<const typename M::Point> sample,
                             const typename M::Point& p,
                             const typename M::Frame& frame,
                             const typename M::Direction& d,
                             const Eigen::VectorXd& coords,
                             double t) {
    { model.fit(sample) } -> std::same_as<ModelFit<typename M::Point, typename M::Frame>>;
    { model.push_forward(frame, coords) } -> std::same_as<typename M::Direction>;
    { model.curve(p, d, t) } -> std::same_as<typename M::Point>;
    { model.project_score(p, d, t) } -> std::same_as<typename M::Point>;
    { model.chord_distance(p, p) } -> std::convertible_to<double>;
};

template <EpcaModel M>
struct EpcaResult
{
    typename M::Point extrinsic_mean;
    typename M::Frame frame;
    SymmetricMatrix covariance;
    Eigen::VectorXd eigenvalues;            // descending
    Eigen::MatrixXd tangent_eigenvectors;   // m x m, column i for eigenvalue i
    std::vector<typename M::Direction> ambient_eigenvectors;
    Eigen::VectorXd explained_ratio;
    Eigen::MatrixXd scores;                 // n x m
    bool zero_spread = false;               // fewer than two samples
    bool zero_variance = false;             // total variance <= kZeroVariance; ratios are all zero

    Index sample_size() const { return scores.rows(); }
};

/// Explained-variance ratios lambda_i / sum(lambda); all zero when the total is <= kZeroVariance.
Eigen::VectorXd explained_ratios(const Eigen::VectorXd& eigenvalues, bool* zero_variance = nullptr);

/**
 * Partition of indices 0..n-1 of descending eigenvalues into maximal runs in
 * which consecutive eigenvalues differ by at most `tol`.
 */
std::vector<std::vector<Index>> multiplicity_grouping(const Eigen::VectorXd& eigenvalues, double tol);

/// 1e-9 relative to the largest eigenvalue; every eigenvalue is tied when the spectrum is numerically zero.
double default_multiplicity_tolerance(const Eigen::VectorXd& eigenvalues);

/// `count` equally spaced values on [-pi/2, pi/2] (128 by default).
std::vector<double> default_t_grid(std::size_t count = 128);

template <EpcaModel M>
EpcaResult<M> run_epca(const M& model, std::span<const typename M::Point> sample)
{
    if (sample.empty())
        throw InputError("run_epca: empty sample");
    auto fit = model.fit(sample);

    EpcaResult<M> r;
    const SpectralDecomposition spec = spectral_decompose(fit.covariance);
    r.extrinsic_mean = std::move(fit.mean);
    r.frame = std::move(fit.frame);
    r.covariance = std::move(fit.covariance);
    r.eigenvalues = spec.eigenvalues;
    r.tangent_eigenvectors = spec.eigenvectors;
    r.ambient_eigenvectors.reserve(static_cast<std::size_t>(spec.eigenvectors.cols()));
    for (Index i = 0; i < spec.eigenvectors.cols(); ++i)
        r.ambient_eigenvectors.push_back(model.push_forward(r.frame, spec.eigenvectors.col(i)));
    r.explained_ratio = explained_ratios(r.eigenvalues, &r.zero_variance);
    r.scores = std::move(fit.scores);
    r.zero_spread = sample.size() < 2;
    return r;
}

namespace detail {
template <EpcaModel M>
void require_simple(const EpcaResult<M>& result, Index component)
{
    const Index m = result.eigenvalues.size();
    if (component < 0 || component >= m)
        throw InputError("principal component index " + std::to_string(component) + " out of range [0, " +
                         std::to_string(m) + ")");
    const auto groups =
        multiplicity_grouping(result.eigenvalues, default_multiplicity_tolerance(result.eigenvalues));
    for (const auto& g : groups) {
        if (g.size() > 1 && std::find(g.begin(), g.end(), component) != g.end()) {
            throw MultiplicityError("eigenvalue " + std::to_string(component) + " belongs to a group of " +
                                    std::to_string(g.size()) +
                                    " tied eigenvalues; its principal curve is undefined (use the principal subset)");
        }
    }
}
} // namespace detail

/// Points of principal curve `component` at each parameter in `t_grid`.
template <EpcaModel M>
std::vector<typename M::Point> principal_curve_points(const M& model,
                                                      const EpcaResult<M>& result,
                                                      Index component,
                                                      std::span<const double> t_grid)
{
    detail::require_simple(result, component);
    const auto& direction = result.ambient_eigenvectors[static_cast<std::size_t>(component)];
    std::vector<typename M::Point> out;
    out.reserve(t_grid.size());
    for (double t : t_grid)
        out.push_back(model.curve(result.extrinsic_mean, direction, t));
    return out;
}

/// Every sample projected onto principal curve `component`, in sample order.
template <EpcaModel M>
std::vector<typename M::Point> project_sample_to_pc(const M& model, const EpcaResult<M>& result, Index component)
{
    detail::require_simple(result, component);
    const auto& direction = result.ambient_eigenvectors[static_cast<std::size_t>(component)];
    const Eigen::VectorXd s = result.scores * result.tangent_eigenvectors.col(component);
    std::vector<typename M::Point> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (Index i = 0; i < s.size(); ++i)
        out.push_back(model.project_score(result.extrinsic_mean, direction, s[i]));
    return out;
}

} // namespace epca

#endif
