#ifndef EPCA_SHAPE_VW_HPP
#define EPCA_SHAPE_VW_HPP

#include "epca/core/frame.hpp"
#include "epca/core/types.hpp"
#include "epca/shape/preshape.hpp"

#include <Eigen/Core>

#include <span>

namespace epca::shape {

/// Minimum gap between the two largest eigenvalues for the VW projection to be defined.
inline constexpr double kSpectralGap = 1e-9;

/// Hermitian k x k matrix H = z z* of a preshape (Veronese-Whitney image).
class VWMatrix
{
  public:
    explicit VWMatrix(Eigen::MatrixXcd h);

    const Eigen::MatrixXcd& matrix() const noexcept { return h_; }

  private:
    Eigen::MatrixXcd h_;
};

VWMatrix vw_embed(const PreShape& p);

/**
 * Spectrum of K = (1/n) sum z_i z_i* restricted to the centered subspace.
 * Eigenvalues ascending (k - 1 of them); the columns of `eigenvectors` are
 * centered orthonormal vectors of C^k.
 */
struct VwSpectrum
{
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    /// Largest eigenvalue minus the second largest.
    double top_gap() const;
};

VwSpectrum vw_spectrum(std::span<const PreShape> sample);

/**
 * Extrinsic (VW) sample mean: top eigenvector of K, re-centered and
 * phase-normalized. Throws FocalPointError when the top eigenvalue is not
 * separated from the next one by more than kSpectralGap.
 */
PreShape vw_mean(std::span<const PreShape> sample);
PreShape vw_mean(const VwSpectrum& spectrum);

/**
 * Tangent frame of the embedded shape space at j([mean]).
 *
 * Stored compactly as 2k - 4 complex directions d_j (k-vectors orthogonal to
 * the mean and to the constant vector): column 2a is a basis vector u_a and
 * column 2a + 1 is i u_a. The ambient frame vector for d_j is the Hermitian
 * matrix (d_j m* + m d_j*) / sqrt(2), which has unit Hilbert-Schmidt norm.
 */
class VwTangentFrame
{
  public:
    VwTangentFrame() = default;

    /// `basis` is k x (k - 2), orthonormal, centered and orthogonal to the mean (checked to 1e-10).
    VwTangentFrame(PreShape mean, const Eigen::MatrixXcd& basis);

    const PreShape& mean() const noexcept { return mean_; }
    const Eigen::MatrixXcd& directions() const noexcept { return directions_; }
    Index dim() const noexcept { return directions_.cols(); }

    /// Real frame coordinates -> complex tangent direction sum_j c_j d_j.
    Eigen::VectorXcd push_forward(const Eigen::VectorXd& coords) const;

    /// Frame vector j as a Hermitian matrix.
    Eigen::MatrixXcd ambient_vector(Index j) const;

    /// The frame in Hilbert-Schmidt coordinates of Hermitian matrices (k^2 ambient dims).
    TangentFrame ambient_frame() const;

    /// Tangential component of j(x) - j(mean) in this frame.
    Eigen::VectorXd coordinates(const PreShape& x) const;

  private:
    PreShape mean_;
    Eigen::MatrixXcd directions_;
};

/// Deterministic frame at `mean` (Householder completion inside the centered subspace).
VwTangentFrame vw_tangent_frame(const PreShape& mean);

/// Frame built from the non-top eigenvectors of K, in descending eigenvalue order.
VwTangentFrame vw_tangent_frame(const VwSpectrum& spectrum);

/// Tangential components of every sample (n x (2k - 4)), rows in input order.
Eigen::MatrixXd vw_scores(std::span<const PreShape> sample, const VwTangentFrame& frame);

struct ShapeCovariance
{
    SymmetricMatrix s;
    VwTangentFrame frame;
};

/**
 * Sample extrinsic covariance of a shape sample in the orthonormal frame
 * vw_tangent_frame(vw_spectrum(sample)).
 *
 * With m the top eigenvector of K, u_a (a < top) the remaining ones and
 * g_a = eta_top - eta_a, the projection differential sends z z* - K to
 *   sum_a (sqrt(2) / g_a) (Re c_a e_a + Im c_a e'_a),  c_a = (u_a* z)(z* m),
 * where e_a, e'_a are the unit frame vectors for u_a and i u_a. The result is
 * the (1/n) covariance of those coordinates. For real data this is twice
 * prentice_covariance(), whose basis vectors have norm sqrt(2) in the
 * Hilbert-Schmidt metric.
 */
ShapeCovariance vw_extrinsic_covariance(std::span<const PreShape> sample);

namespace detail {
/// Test hook: `imaginary_sign` = -1 flips the sign of every i u_a coordinate.
ShapeCovariance vw_extrinsic_covariance(std::span<const PreShape> sample, double imaginary_sign);
}

/// normalize(cos t m + sin t d); `direction` must be unit, centered, and orthogonal to the mean.
PreShape shape_pc_curve(const PreShape& mean, const Eigen::VectorXcd& direction, double t);

/**
 * Restricts the tangential component of j(x) - j(mean) to the unit tangent
 * direction `direction`, adds it to j(mean) and projects back to the shape
 * space. The result lies on shape_pc_curve(mean, direction, .).
 */
PreShape shape_project_to_pc(const PreShape& x, const PreShape& mean, const Eigen::VectorXcd& direction);

/// Same, given the tangential score s along `direction` directly.
PreShape shape_project_score(const PreShape& mean, const Eigen::VectorXcd& direction, double s);

/**
 * Closed-form sample extrinsic covariance for axial data in RP^{N-1}.
 *
 * `x` holds unit vectors as columns. With eta_1 <= ... <= eta_N the
 * eigenvalues of K = (1/n) sum x_i x_i^T, m_a the eigenvectors and m = m_N:
 *   S_ab = n^{-1} (eta_N - eta_a)^{-1} (eta_N - eta_b)^{-1} sum_i (m_a.x_i)(m_b.x_i)(m.x_i)^2
 * for a, b < N, expressed in the basis of unit tangent vectors m_a of the
 * sphere at m. Their images (m_a m^T + m m_a^T) have Hilbert-Schmidt norm
 * sqrt(2), so the covariance in the orthonormal frame() is 2 S.
 */
struct PrenticeCovariance
{
    SymmetricMatrix covariance;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    /// Orthonormal frame (m_a m^T + m m_a^T) / sqrt(2), a = 1..N-1, in symmetric-matrix coordinates.
    TangentFrame frame() const;
};

PrenticeCovariance prentice_covariance(const Eigen::MatrixXd& x);

} // namespace epca::shape

#endif
