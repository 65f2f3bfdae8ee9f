#ifndef SPECLAB_EIG_HPP
#define SPECLAB_EIG_HPP

#include "speclab/types.hpp"

namespace speclab {

/// Eigenvalues of a complex tridiagonal matrix via single-shift Hessenberg QR
/// with Wilkinson shifts. Deterministic; deflation threshold
/// 1e-14*(|h_kk|+|h_k+1,k+1|), budget 40 iterations per eigenvalue with an
/// exceptional shift every 10 stalled iterations.
Spectrum eig_general(const TridiagonalMatrix& a);

/// Same algorithm on a dense upper-Hessenberg matrix. Throws NotHessenberg if
/// any entry below the first subdiagonal exceeds 1e-14*entrywise_l1(a).
Spectrum eig_general(const DenseMatrix& a);

/// Eigenvalues of a real symmetric tridiagonal matrix via implicit-shift QL
/// with Wilkinson shifts. Output sorted ascending with zero imaginary parts.
/// Throws NotHermitian unless sub == super entrywise and all entries are real
/// (tolerance 1e-14 per entry).
Spectrum eig_hermitian(const TridiagonalMatrix& a);

/// Unitary (Householder) similarity reduction of a square dense matrix to
/// upper Hessenberg form. Eigenvalues and trace are preserved.
DenseMatrix hessenberg_reduce(const DenseMatrix& a);

/// Eigenvalues of a Hermitian tridiagonal matrix (complex off-diagonals
/// allowed): a diagonal unitary similarity makes it real symmetric, then QL.
/// Sorted ascending.
std::vector<double> hermitian_eigenvalues(const TridiagonalMatrix& a);

/// Eigenvalues of a dense Hermitian matrix: Householder reduction to
/// Hermitian tridiagonal, then the tridiagonal path. Sorted ascending.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a);

/// Dispatch: real symmetric input goes through QL, other input through QR
/// (after a Hessenberg reduction when needed).
Spectrum eig_auto(const TridiagonalMatrix& a);
Spectrum eig_auto(const DenseMatrix& a);

bool is_upper_hessenberg(const DenseMatrix& a, double tol_scale = 1e-14);
bool is_hermitian(const DenseMatrix& a, double tol_scale = 1e-12);

}  // namespace speclab

#endif
