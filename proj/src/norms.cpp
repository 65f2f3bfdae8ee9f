#include "speclab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace speclab {

namespace {

constexpr double kJacobiTol = 1e-14;
constexpr int kSweepBudget = 30;

// Halving and the multiplication by -i below are exact in IEEE arithmetic,
// which is what makes the hermitian_parts postconditions bit-tight.
inline cxd half_sum_conj(cxd x, cxd y_conjugand) { return 0.5 * (x + std::conj(y_conjugand)); }

inline cxd div_by_i(cxd z) { return {z.imag(), -z.real()}; }

}  // namespace

std::vector<double> singular_values(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw Error("singular_values: matrix must be square");
    if (!a.all_finite()) throw Error("singular_values: non-finite entries");
    const std::size_t n = a.rows();
    if (n == 0) return {};

    // Column-major working copy; rotations act on column pairs.
    std::vector<std::vector<cxd>> col(n, std::vector<cxd>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col[j][i] = a(i, j);

    for (int sweep = 0; sweep < kSweepBudget; ++sweep) {
        double max_sine = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cxd gamma = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    alpha += std::norm(col[p][i]);
                    beta += std::norm(col[q][i]);
                    gamma += std::conj(col[p][i]) * col[q][i];
                }
                const double g = std::abs(gamma);
                if (g <= kJacobiTol * std::sqrt(alpha * beta) || alpha == 0.0 || beta == 0.0)
                    continue;

                const cxd phase = gamma / g;
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(tau, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = c * t;
                max_sine = std::max(max_sine, std::abs(s));

                const cxd sp = s * std::conj(phase);  // multiplies column q into p
                const cxd sq = s * phase;             // multiplies column p into q
                for (std::size_t i = 0; i < n; ++i) {
                    const cxd up = col[p][i], uq = col[q][i];
                    col[p][i] = c * up - sp * uq;
                    col[q][i] = sq * up + c * uq;
                }
            }
        }
        if (max_sine <= kJacobiTol) {
            std::vector<double> sv(n);
            for (std::size_t j = 0; j < n; ++j) {
                double s2 = 0.0;
                for (std::size_t i = 0; i < n; ++i) s2 += std::norm(col[j][i]);
                sv[j] = std::sqrt(s2);
            }
            std::sort(sv.begin(), sv.end(), std::greater<double>());
            return sv;
        }
    }
    throw NonConvergence("singular_values: Jacobi sweeps did not converge");
}

std::vector<double> singular_values(const TridiagonalMatrix& a) {
    return singular_values(a.to_dense());
}

double trace_norm(const DenseMatrix& a) {
    double t = 0.0;
    for (double s : singular_values(a)) t += s;
    return t;
}

double trace_norm(const TridiagonalMatrix& a) { return trace_norm(a.to_dense()); }

double entrywise_l1(const DenseMatrix& a) {
    double t = 0.0;
    for (const cxd& z : a.data()) t += std::abs(z);
    return t;
}

double entrywise_l1(const TridiagonalMatrix& a) {
    double t = 0.0;
    for (const cxd& z : a.diag()) t += std::abs(z);
    for (const cxd& z : a.sub()) t += std::abs(z);
    for (const cxd& z : a.super()) t += std::abs(z);
    return t;
}

double operator_norm(const DenseMatrix& a) {
    std::vector<double> sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.front();
}

double operator_norm(const TridiagonalMatrix& a) { return operator_norm(a.to_dense()); }

double frobenius_norm(const DenseMatrix& a) {
    double t = 0.0;
    for (const cxd& z : a.data()) t += std::norm(z);
    return std::sqrt(t);
}

std::pair<DenseMatrix, DenseMatrix> hermitian_parts(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw Error("hermitian_parts: matrix must be square");
    const std::size_t n = a.rows();
    DenseMatrix re(n, n), im(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            re(i, j) = half_sum_conj(a(i, j), a(j, i));
            im(i, j) = div_by_i(0.5 * (a(i, j) - std::conj(a(j, i))));
        }
    }
    return {re, im};
}

std::pair<TridiagonalMatrix, TridiagonalMatrix> hermitian_parts(const TridiagonalMatrix& a) {
    const std::size_t n = a.order();
    TridiagonalMatrix re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re.diag()[i] = half_sum_conj(a.diag()[i], a.diag()[i]);
        im.diag()[i] = div_by_i(0.5 * (a.diag()[i] - std::conj(a.diag()[i])));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        re.sub()[i] = half_sum_conj(a.sub()[i], a.super()[i]);
        re.super()[i] = half_sum_conj(a.super()[i], a.sub()[i]);
        im.sub()[i] = div_by_i(0.5 * (a.sub()[i] - std::conj(a.super()[i])));
        im.super()[i] = div_by_i(0.5 * (a.super()[i] - std::conj(a.sub()[i])));
    }
    return {re, im};
}

}  // namespace speclab
