#include "speclab/normlab.hpp"

#include <cmath>
#include <numbers>

#include "speclab/norms.hpp"

namespace speclab {

DenseMatrix diagonal_part(const DenseMatrix& a, int m) {
    if (a.rows() != a.cols()) throw Error("diagonal_part: matrix must be square");
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    if (m <= -n || m >= n) throw Error("diagonal_part: |m| must be below the order");
    DenseMatrix d(a.rows(), a.cols());
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t j = i - m;
        if (j >= 0 && j < n)
            d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return d;
}

DenseMatrix bhatia_average(const DenseMatrix& a, int m, std::size_t grid_n) {
    if (a.rows() != a.cols()) throw Error("bhatia_average: matrix must be square");
    const std::size_t n = a.rows();
    if (grid_n < 2 * n - 1)
        throw GridTooCoarse("bhatia_average: need N >= 2n-1 for an exact average");

    DenseMatrix acc(n, n);
    for (std::size_t l = 0; l < grid_n; ++l) {
        const double t = -std::numbers::pi +
                         2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(grid_n);
        const cxd em = std::polar(1.0, -m * t);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                // (D A D*)_{ij} = exp(i(i-j)t) a_{ij}
                const double diff = static_cast<double>(i) - static_cast<double>(j);
                acc(i, j) += std::polar(1.0, diff * t) * em * a(i, j);
            }
        }
    }
    for (cxd& z : acc.data()) z /= static_cast<double>(grid_n);
    return acc;
}

namespace {

NormEquivalenceReport check_impl(double tn, double ew, int c_struct) {
    NormEquivalenceReport r;
    r.trace_norm_value = tn;
    r.entrywise_value = ew;
    r.c_struct = c_struct;
    r.tolerance = 1e-9 * (1.0 + ew);
    r.lower_ok = ew >= tn - r.tolerance;
    r.upper_ok = ew <= static_cast<double>(c_struct) * tn + r.tolerance;
    if (c_struct == 3) {
        r.loose_checked = true;
        r.loose_lower_ok = ew >= tn / 3.0 - r.tolerance;
        r.loose_upper_ok = ew <= 9.0 * tn + r.tolerance;
    }
    return r;
}

}  // namespace

NormEquivalenceReport norm_equivalence_check(const TridiagonalMatrix& a) {
    return check_impl(trace_norm(a), entrywise_l1(a), 3);
}

NormEquivalenceReport norm_equivalence_check(const DenseMatrix& a, int c_struct) {
    if (c_struct < 1) throw Error("norm_equivalence_check: structure class needs >= 1 diagonal");
    return check_impl(trace_norm(a), entrywise_l1(a), c_struct);
}

int nonzero_diagonal_count(const DenseMatrix& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    int count = 0;
    for (std::int64_t m = 1 - n; m <= n - 1; ++m) {
        bool nonzero = false;
        for (std::int64_t i = std::max<std::int64_t>(0, m); i < n && !nonzero; ++i) {
            const std::int64_t j = i - m;
            if (j >= 0 && j < n &&
                a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != cxd(0.0))
                nonzero = true;
        }
        if (nonzero) ++count;
    }
    return count;
}

}  // namespace speclab
