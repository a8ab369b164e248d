#include "epca/core/frame.hpp"

#include "epca/core/errors.hpp"

#include <cmath>

namespace epca {

TangentFrame::TangentFrame(AmbientVector base_point, Eigen::MatrixXd vectors)
  : base_point_(std::move(base_point)), vectors_(std::move(vectors))
{
    if (base_point_.size() != vectors_.rows())
        throw InputError("tangent frame: base point and frame vectors differ in ambient dimension");
    const Index m = vectors_.cols();
    const Eigen::MatrixXd gram = vectors_.transpose() * vectors_;
    const double err = (gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    if (m > 0 && !(err <= kUnitTolerance))
        throw InputError("tangent frame vectors are not orthonormal (max Gram error " + std::to_string(err) + ")");
}

AmbientVector TangentFrame::push_forward(const Eigen::VectorXd& coords) const
{
    if (coords.size() != dim())
        throw InputError("push_forward: expected " + std::to_string(dim()) + " frame coordinates");
    return vectors_ * coords;
}

Eigen::MatrixXd complete_orthonormal_frame(const AmbientVector& u)
{
    const Index n = u.size();
    if (n < 1)
        throw InputError("complete_orthonormal_frame: empty vector");
    if (!u.allFinite() || std::abs(u.norm() - 1.0) > kUnitTolerance)
        throw InputError("complete_orthonormal_frame: input must be a unit vector");

    Eigen::VectorXd w = u;
    w[n - 1] -= 1.0;
    const double w2 = w.squaredNorm();

    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
    // w2 is 0 only for u == e_N (up to rounding); then H = I already swaps nothing.
    if (w2 > 1e-300)
        h.noalias() -= (2.0 / w2) * (w * w.transpose());
    return h.leftCols(n - 1);
}

Eigen::VectorXd tangential_component(const AmbientVector& v, const TangentFrame& frame)
{
    if (v.size() != frame.ambient_dim())
        throw InputError("tangential_component: vector has dimension " + std::to_string(v.size()) + ", frame expects " +
                         std::to_string(frame.ambient_dim()));
    return frame.vectors().transpose() * v;
}

SymmetricMatrix general_extrinsic_covariance(const Eigen::MatrixXd& embedded,
                                             const TangentFrame& frame,
                                             const Eigen::MatrixXd& differential)
{
    const Index n_amb = frame.ambient_dim();
    if (embedded.rows() != n_amb || differential.rows() != n_amb || differential.cols() != n_amb)
        throw InputError("general_extrinsic_covariance: dimension mismatch");
    const Index n = embedded.cols();
    if (n < 1)
        throw InputError("general_extrinsic_covariance: empty sample");

    const Eigen::VectorXd mean = embedded.rowwise().mean();
    const Eigen::MatrixXd centered = embedded.colwise() - mean;
    const Eigen::MatrixXd s = centered * centered.transpose() / static_cast<double>(n);
    const Eigen::MatrixXd a = frame.vectors().transpose() * differential;
    return SymmetricMatrix(a * s * a.transpose());
}

} // namespace epca
