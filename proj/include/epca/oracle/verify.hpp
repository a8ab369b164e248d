#ifndef EPCA_ORACLE_VERIFY_HPP
#define EPCA_ORACLE_VERIFY_HPP

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace epca::oracle {

enum class VerifyBackend
{
    Sphere,
    Shape,
};

struct VerifyRow
{
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/**
 * Closed forms checked against the brute-force oracles on seeded random data.
 *
 * Sphere: extrinsic mean vs Fibonacci-grid argmin, d P_j vs central
 * differences, closed-form covariance vs the general estimator built from
 * finite differences. Shape: VW mean of triangles vs CP1-grid argmin, the
 * real (Prentice) and complex covariance formulas vs the general estimator,
 * and the eigen-gap scaling of d P_j at diagonal matrices.
 *
 * `inject_fault` corrupts the closed-form covariance path (sign flip) so the
 * covariance rows must fail.
 */
std::vector<VerifyRow> run_verification(VerifyBackend backend, std::uint64_t seed, bool inject_fault = false);

/// Relative Frobenius error ‖a - b‖ / max(‖b‖, 1e-300).
double relative_error(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

} // namespace epca::oracle

#endif
