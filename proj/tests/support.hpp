#ifndef SPECLAB_TESTS_SUPPORT_HPP
#define SPECLAB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "speclab/rng.hpp"
#include "speclab/types.hpp"

namespace speclab::testing {

inline constexpr std::uint64_t kSeed = 20240101;

inline TridiagonalMatrix random_complex_tridiagonal(Rng& rng, std::size_t n, double radius = 1.0) {
    TridiagonalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.diag()[i] = rng.complex_in_box(radius);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a.sub()[i] = rng.complex_in_box(radius);
        a.super()[i] = rng.complex_in_box(radius);
    }
    return a;
}

inline TridiagonalMatrix random_real_symmetric_tridiagonal(Rng& rng, std::size_t n,
                                                           double radius = 1.0) {
    TridiagonalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.diag()[i] = rng.uniform(-radius, radius);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double v = rng.uniform(-radius, radius);
        a.sub()[i] = v;
        a.super()[i] = v;
    }
    return a;
}

inline DenseMatrix random_dense(Rng& rng, std::size_t n, double radius = 1.0) {
    DenseMatrix a(n, n);
    for (cxd& z : a.data()) z = rng.complex_in_box(radius);
    return a;
}

inline DenseMatrix random_banded(Rng& rng, std::size_t n, int half_bandwidth, double radius = 1.0) {
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)) <=
                half_bandwidth)
                a(i, j) = rng.complex_in_box(radius);
    return a;
}

/// Match two eigenvalue multisets by sorting (real, imag) lexicographically;
/// returns the largest pairwise distance.
inline double multiset_distance(std::vector<cxd> x, std::vector<cxd> y) {
    auto key = [](const cxd& a, const cxd& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(x.begin(), x.end(), key);
    std::sort(y.begin(), y.end(), key);
    if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

/// Roots of a monic cubic z^3 + a2 z^2 + a1 z + a0 by Cardano's formula.
inline std::vector<cxd> cardano_roots(cxd a2, cxd a1, cxd a0) {
    const cxd p = a1 - a2 * a2 / 3.0;
    const cxd q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    const cxd disc = q * q / 4.0 + p * p * p / 27.0;
    const cxd sq = std::sqrt(disc);
    cxd u3 = -q / 2.0 + sq;
    if (std::abs(u3) < std::abs(-q / 2.0 - sq)) u3 = -q / 2.0 - sq;
    cxd u = std::pow(u3, 1.0 / 3.0);
    if (std::abs(u) == 0.0) u = std::pow(-q, 1.0 / 3.0);  // p == 0 path
    const cxd omega(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<cxd> roots;
    for (int i = 0; i < 3; ++i) {
        cxd ui = u;
        for (int k = 0; k < i; ++k) ui *= omega;
        const cxd v = (std::abs(ui) > 0.0) ? -p / (3.0 * ui) : cxd(0.0);
        roots.push_back(ui + v - a2 / 3.0);
    }
    return roots;
}

}  // namespace speclab::testing

#endif
