#ifndef EPCA_CORE_REDUCE_HPP
#define EPCA_CORE_REDUCE_HPP

#include "epca/core/types.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <vector>

namespace epca {

/**
 * Pairwise (cascade) sum of the columns of `columns`, visited in `order`.
 * The summation tree depends only on the length of `order`, so equal inputs
 * in equal order give bitwise-equal results.
 */
Eigen::VectorXd pairwise_column_sum(const Eigen::MatrixXd& columns, const std::vector<Index>& order);
Eigen::VectorXcd pairwise_column_sum(const Eigen::MatrixXcd& columns, const std::vector<Index>& order);

/// Column indices sorted lexicographically by column entries (real parts, then imaginary parts).
std::vector<Index> canonical_order(const Eigen::MatrixXd& columns);
std::vector<Index> canonical_order(const Eigen::MatrixXcd& columns);

/// Worker count from EPCA_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/**
 * Run body(i) for i in [0, n) on up to worker_count() threads. Each index is
 * visited exactly once; callers write results to per-index slots.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace epca

#endif
