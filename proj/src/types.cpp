#include "speclab/types.hpp"

#include <cmath>

namespace speclab {

namespace {
inline bool finite_cx(const cxd& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

bool DenseMatrix::all_finite() const {
    for (const cxd& z : a_)
        if (!finite_cx(z)) return false;
    return true;
}

bool TridiagonalMatrix::all_finite() const {
    for (const cxd& z : diag_)
        if (!finite_cx(z)) return false;
    for (const cxd& z : sub_)
        if (!finite_cx(z)) return false;
    for (const cxd& z : super_)
        if (!finite_cx(z)) return false;
    return true;
}

bool TridiagonalMatrix::is_hermitian(double tol) const {
    for (const cxd& z : diag_)
        if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) return false;
    for (std::size_t i = 0; i + 1 < n_; ++i)
        if (std::abs(sub_[i] - std::conj(super_[i])) > tol * (1.0 + std::abs(sub_[i]) + std::abs(super_[i])))
            return false;
    return true;
}

bool TridiagonalMatrix::is_real_symmetric(double tol) const {
    for (const cxd& z : diag_)
        if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) return false;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
        if (std::abs(sub_[i].imag()) > tol * (1.0 + std::abs(sub_[i]))) return false;
        if (std::abs(super_[i].imag()) > tol * (1.0 + std::abs(super_[i]))) return false;
        if (std::abs(sub_[i] - super_[i]) > tol * (1.0 + std::abs(sub_[i]) + std::abs(super_[i])))
            return false;
    }
    return true;
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("matrix +: shape mismatch");
    DenseMatrix r = x;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += y.data()[i];
    return r;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw Error("matrix -: shape mismatch");
    DenseMatrix r = x;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= y.data()[i];
    return r;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols() != y.rows()) throw Error("matrix *: shape mismatch");
    DenseMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const cxd xik = x(i, k);
            if (xik == cxd(0.0)) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

}  // namespace speclab
