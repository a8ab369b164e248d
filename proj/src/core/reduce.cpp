#include "epca/core/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

namespace epca {
namespace {

template <typename Matrix, typename Vector>
Vector pairwise_sum_range(const Matrix& columns, const std::vector<Index>& order, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return columns.col(order[lo]);
    if (hi - lo == 2)
        return columns.col(order[lo]) + columns.col(order[lo + 1]);
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum_range<Matrix, Vector>(columns, order, lo, mid) +
           pairwise_sum_range<Matrix, Vector>(columns, order, mid, hi);
}

template <typename Matrix, typename Less>
std::vector<Index> sorted_columns(const Matrix& columns, Less less)
{
    std::vector<Index> idx(static_cast<std::size_t>(columns.cols()));
    std::iota(idx.begin(), idx.end(), Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) { return less(columns.col(a), columns.col(b)); });
    return idx;
}

} // namespace

Eigen::VectorXd pairwise_column_sum(const Eigen::MatrixXd& columns, const std::vector<Index>& order)
{
    if (order.empty())
        return Eigen::VectorXd::Zero(columns.rows());
    return pairwise_sum_range<Eigen::MatrixXd, Eigen::VectorXd>(columns, order, 0, order.size());
}

Eigen::VectorXcd pairwise_column_sum(const Eigen::MatrixXcd& columns, const std::vector<Index>& order)
{
    if (order.empty())
        return Eigen::VectorXcd::Zero(columns.rows());
    return pairwise_sum_range<Eigen::MatrixXcd, Eigen::VectorXcd>(columns, order, 0, order.size());
}

std::vector<Index> canonical_order(const Eigen::MatrixXd& columns)
{
    return sorted_columns(columns, [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
}

std::vector<Index> canonical_order(const Eigen::MatrixXcd& columns)
{
    return sorted_columns(columns, [](const auto& a, const auto& b) {
        for (Index i = 0; i < a.size(); ++i) {
            if (a[i].real() != b[i].real())
                return a[i].real() < b[i].real();
        }
        for (Index i = 0; i < a.size(); ++i) {
            if (a[i].imag() != b[i].imag())
                return a[i].imag() < b[i].imag();
        }
        return false;
    });
}

unsigned worker_count()
{
    unsigned n = 0;
    if (const char* env = std::getenv("EPCA_THREADS")) {
        try {
            n = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            n = 0;
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < n; i = next++)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
}

} // namespace epca
