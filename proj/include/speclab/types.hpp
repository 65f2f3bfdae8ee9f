#ifndef SPECLAB_TYPES_HPP
#define SPECLAB_TYPES_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace speclab {

using cxd = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what, std::size_t index = 0)
        : Error(what), stuck_index(index) {}
    std::size_t stuck_index;
};

struct NotHessenberg : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotHermitianSymbol : Error {
    using Error::Error;
};

struct Unbounded : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& what, int line_no = 0)
        : Error(what), line(line_no) {}
    int line;
};

// ---------------------------------------------------------------------------
// Matrix containers
// ---------------------------------------------------------------------------

/// Dense complex matrix, row-major storage.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cxd(0.0, 0.0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<cxd>& data() { return a_; }
    const std::vector<cxd>& data() const { return a_; }

    DenseMatrix adjoint() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cxd trace() const {
        cxd t = 0.0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool all_finite() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cxd> a_;
};

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);

/// Complex tridiagonal matrix of order n: sub/super diagonals have n-1 entries.
/// Entry (j+1, j) = sub[j], (j, j) = diag[j], (j, j+1) = super[j].
class TridiagonalMatrix {
public:
    TridiagonalMatrix() = default;
    explicit TridiagonalMatrix(std::size_t n)
        : n_(n), sub_(n > 0 ? n - 1 : 0, 0.0), diag_(n, 0.0), super_(n > 0 ? n - 1 : 0, 0.0) {}
    TridiagonalMatrix(std::vector<cxd> sub, std::vector<cxd> diag, std::vector<cxd> super)
        : n_(diag.size()), sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
        if (n_ == 0 || sub_.size() != n_ - 1 || super_.size() != n_ - 1)
            throw Error("tridiagonal: band lengths must be n-1, n, n-1");
    }

    std::size_t order() const { return n_; }
    std::vector<cxd>& sub() { return sub_; }
    std::vector<cxd>& diag() { return diag_; }
    std::vector<cxd>& super() { return super_; }
    const std::vector<cxd>& sub() const { return sub_; }
    const std::vector<cxd>& diag() const { return diag_; }
    const std::vector<cxd>& super() const { return super_; }

    cxd trace() const {
        cxd t = 0.0;
        for (const cxd& d : diag_) t += d;
        return t;
    }

    DenseMatrix to_dense() const {
        DenseMatrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) m(i, i) = diag_[i];
        for (std::size_t i = 0; i + 1 < n_; ++i) {
            m(i + 1, i) = sub_[i];
            m(i, i + 1) = super_[i];
        }
        return m;
    }

    TridiagonalMatrix adjoint() const {
        TridiagonalMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i) m.diag_[i] = std::conj(diag_[i]);
        for (std::size_t i = 0; i + 1 < n_; ++i) {
            m.sub_[i] = std::conj(super_[i]);
            m.super_[i] = std::conj(sub_[i]);
        }
        return m;
    }

    /// Leading m x m principal block.
    TridiagonalMatrix leading_block(std::size_t m) const {
        if (m == 0 || m > n_) throw Error("leading_block: order out of range");
        TridiagonalMatrix b(m);
        for (std::size_t i = 0; i < m; ++i) b.diag_[i] = diag_[i];
        for (std::size_t i = 0; i + 1 < m; ++i) {
            b.sub_[i] = sub_[i];
            b.super_[i] = super_[i];
        }
        return b;
    }

    bool all_finite() const;

    /// True when sub == conj(super) entrywise and the diagonal is real (tol per entry).
    bool is_hermitian(double tol = 0.0) const;
    /// True when sub == super entrywise and everything is real (tol per entry).
    bool is_real_symmetric(double tol = 0.0) const;

private:
    std::size_t n_ = 0;
    std::vector<cxd> sub_, diag_, super_;
};

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

/// Multiset of eigenvalues together with solver diagnostics.
struct Spectrum {
    std::vector<cxd> eigenvalues;
    double max_residual = 0.0;  // largest neglected subdiagonal at deflation time
    std::size_t iterations = 0;

    std::size_t size() const { return eigenvalues.size(); }

    cxd sum() const {
        cxd s = 0.0;
        for (const cxd& z : eigenvalues) s += z;
        return s;
    }
};

}  // namespace speclab

#endif
