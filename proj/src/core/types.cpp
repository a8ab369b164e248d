#include "epca/core/types.hpp"

#include "epca/core/errors.hpp"

namespace epca {

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& a)
{
    if (a.rows() != a.cols())
        throw InputError("symmetric matrix must be square, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    if (!a.allFinite())
        throw InputError("symmetric matrix has non-finite entries");
    entries_ = 0.5 * (a + a.transpose());
}

} // namespace epca
