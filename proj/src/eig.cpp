#include "speclab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "speclab/norms.hpp"

namespace speclab {

namespace {

constexpr double kDeflationTol = 1e-14;
constexpr int kItersPerEigenvalue = 40;
constexpr int kExceptionalEvery = 10;

// Complex Givens pair (c real, s complex) with G = [[c, s], [-conj(s), c]]
// chosen so that G*(x, y)^T has zero second component.
struct Givens {
    double c;
    cxd s;
};

Givens make_givens(cxd x, cxd y) {
    double ax = std::abs(x), ay = std::abs(y);
    if (ay == 0.0) return {1.0, cxd(0.0)};
    if (ax == 0.0) return {0.0, cxd(1.0)};
    double r = std::hypot(ax, ay);
    return {ax / r, (x / ax) * std::conj(y) / r};
}

// Row rotation on rows (i, i+1), columns [jlo, jhi]. Manual real arithmetic:
// the generic complex operator* is a library call on this toolchain.
inline void rotate_rows(DenseMatrix& h, std::size_t i, const Givens& g, std::size_t jlo,
                        std::size_t jhi) {
    const double c = g.c, sr = g.s.real(), si = g.s.imag();
    for (std::size_t j = jlo; j <= jhi; ++j) {
        cxd& u = h(i, j);
        cxd& v = h(i + 1, j);
        const double ur = u.real(), ui = u.imag();
        const double vr = v.real(), vi = v.imag();
        u = cxd(c * ur + sr * vr - si * vi, c * ui + sr * vi + si * vr);
        v = cxd(-sr * ur - si * ui + c * vr, -sr * ui + si * ur + c * vi);
    }
}

// Column rotation (right multiplication by G^*) on columns (j, j+1),
// rows [ilo, ihi].
inline void rotate_cols(DenseMatrix& h, std::size_t j, const Givens& g, std::size_t ilo,
                        std::size_t ihi) {
    const double c = g.c, sr = g.s.real(), si = g.s.imag();
    for (std::size_t i = ilo; i <= ihi; ++i) {
        cxd& u = h(i, j);
        cxd& v = h(i, j + 1);
        const double ur = u.real(), ui = u.imag();
        const double vr = v.real(), vi = v.imag();
        u = cxd(c * ur + sr * vr + si * vi, c * ui + sr * vi - si * vr);
        v = cxd(-sr * ur + si * ui + c * vr, -sr * ui - si * ur + c * vi);
    }
}

// Eigenvalue of the trailing 2x2 block closest to its (hi,hi) entry.
cxd wilkinson_shift(const DenseMatrix& h, std::size_t hi) {
    const cxd a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
    const cxd c = h(hi, hi - 1), d = h(hi, hi);
    const cxd half = 0.5 * (a - d);
    const cxd disc = std::sqrt(half * half + b * c);
    const cxd mu1 = d + half + disc;
    const cxd mu2 = d + half - disc;
    return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

Spectrum hessenberg_qr(DenseMatrix h) {
    const std::size_t n = h.rows();
    Spectrum out;
    out.eigenvalues.resize(n);

    // Scale fallback for deflation tests on entries whose neighbourhood is 0.
    double scale = 0.0;
    for (const cxd& z : h.data()) scale += std::abs(z);
    if (scale == 0.0) {
        return out;  // zero matrix
    }
    scale /= static_cast<double>(n);

    std::size_t hi = n - 1;
    int stalled = 0;
    while (true) {
        // Find the start of the active block: the first negligible
        // subdiagonal below hi splits the problem.
        std::size_t lo = hi;
        while (lo > 0) {
            double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (s == 0.0) s = scale;
            if (std::abs(h(lo, lo - 1)) <= kDeflationTol * s) {
                out.max_residual = std::max(out.max_residual, std::abs(h(lo, lo - 1)));
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }

        if (lo == hi) {
            out.eigenvalues[hi] = h(hi, hi);
            stalled = 0;
            if (hi == 0) break;
            --hi;
            continue;
        }

        if (stalled >= kItersPerEigenvalue)
            throw NonConvergence("eig_general: eigenvalue failed to deflate", hi);

        cxd shift;
        if (stalled > 0 && stalled % kExceptionalEvery == 0) {
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            shift = wilkinson_shift(h, hi);
        }

        // Explicit shifted QR step restricted to the active block.
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= shift;
        std::vector<Givens> rot(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            Givens g = make_givens(h(k, k), h(k + 1, k));
            rot[k - lo] = g;
            rotate_rows(h, k, g, k, hi);
            h(k + 1, k) = 0.0;
        }
        for (std::size_t k = lo; k < hi; ++k)
            rotate_cols(h, k, rot[k - lo], lo, std::min(k + 2, hi));
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) += shift;

        ++stalled;
        ++out.iterations;
    }
    return out;
}

// Implicit-shift QL for a real symmetric tridiagonal given by d (diagonal)
// and e (subdiagonal, e[i] couples i and i+1).
void symmetric_ql(std::vector<double>& d, std::vector<double>& e, Spectrum& diag_out) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e.push_back(0.0);  // sentinel

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == kItersPerEigenvalue)
                    throw NonConvergence("eig_hermitian: eigenvalue failed to deflate", l);
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
                ++diag_out.iterations;
            }
        } while (m != l);
        diag_out.max_residual = std::max(diag_out.max_residual, std::abs(e[l]));
    }
}

}  // namespace

bool is_upper_hessenberg(const DenseMatrix& a, double tol_scale) {
    const double tol = tol_scale * entrywise_l1(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j + 1 < i; ++j)
            if (std::abs(a(i, j)) > tol) return false;
    return true;
}

bool is_hermitian(const DenseMatrix& a, double tol_scale) {
    if (a.rows() != a.cols()) return false;
    const double tol = tol_scale * (1.0 + entrywise_l1(a));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

Spectrum eig_general(const TridiagonalMatrix& a) {
    if (!a.all_finite()) throw Error("eig_general: non-finite entries");
    return hessenberg_qr(a.to_dense());
}

Spectrum eig_general(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw Error("eig_general: matrix must be square");
    if (!a.all_finite()) throw Error("eig_general: non-finite entries");
    if (!is_upper_hessenberg(a)) throw NotHessenberg("eig_general: input is not upper Hessenberg");
    return hessenberg_qr(a);
}

Spectrum eig_hermitian(const TridiagonalMatrix& a) {
    if (!a.all_finite()) throw Error("eig_hermitian: non-finite entries");
    if (!a.is_real_symmetric(1e-14))
        throw NotHermitian("eig_hermitian: input is not real symmetric tridiagonal");
    const std::size_t n = a.order();
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a.diag()[i].real();
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a.sub()[i].real();

    Spectrum out;
    symmetric_ql(d, e, out);
    std::sort(d.begin(), d.end());
    out.eigenvalues.assign(d.begin(), d.end());
    return out;
}

DenseMatrix hessenberg_reduce(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw Error("hessenberg_reduce: matrix must be square");
    DenseMatrix h = a;
    const std::size_t n = h.rows();
    if (n < 3) return h;

    std::vector<cxd> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector annihilating column k below row k+1.
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        cxd x0 = h(k + 1, k);
        cxd phase = (x0 == cxd(0.0)) ? cxd(1.0) : x0 / std::abs(x0);
        cxd alpha = -phase * xnorm;

        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // Left: H -= beta * v (v^H H) on rows k+1.., columns k..
        for (std::size_t j = k; j < n; ++j) {
            cxd dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * dot;
        }
        // Right: H -= beta * (H v) v^H on columns k+1.., all rows.
        for (std::size_t i = 0; i < n; ++i) {
            cxd dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= beta;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return h;
}

std::vector<double> hermitian_eigenvalues(const TridiagonalMatrix& a) {
    if (!a.is_hermitian(1e-12))
        throw NotHermitian("hermitian_eigenvalues: tridiagonal input is not Hermitian");
    const std::size_t n = a.order();
    // Diagonal unitary similarity turns the off-diagonals into their moduli.
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a.diag()[i].real();
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a.sub()[i]);

    Spectrum tmp;
    symmetric_ql(d, e, tmp);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
    if (!is_hermitian(a)) throw NotHermitian("hermitian_eigenvalues: input is not Hermitian");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    DenseMatrix h = hessenberg_reduce(a);
    // The reduction of a Hermitian matrix is Hermitian tridiagonal up to
    // roundoff; symmetrize the bands before the QL pass.
    TridiagonalMatrix t(n);
    for (std::size_t i = 0; i < n; ++i) t.diag()[i] = h(i, i).real();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const cxd lower = h(i + 1, i);
        const cxd upper = std::conj(h(i, i + 1));
        t.sub()[i] = 0.5 * (lower + upper);
        t.super()[i] = std::conj(t.sub()[i]);
    }
    return hermitian_eigenvalues(t);
}

Spectrum eig_auto(const TridiagonalMatrix& a) {
    if (a.is_real_symmetric(1e-14)) return eig_hermitian(a);
    if (a.is_hermitian(1e-14)) {
        std::vector<double> d = hermitian_eigenvalues(a);
        Spectrum out;
        out.eigenvalues.assign(d.begin(), d.end());
        return out;
    }
    return eig_general(a);
}

Spectrum eig_auto(const DenseMatrix& a) {
    if (is_hermitian(a, 1e-14)) {
        std::vector<double> d = hermitian_eigenvalues(a);
        Spectrum out;
        out.eigenvalues.assign(d.begin(), d.end());
        return out;
    }
    if (is_upper_hessenberg(a)) return eig_general(a);
    return eig_general(hessenberg_reduce(a));
}

}  // namespace speclab
