#ifndef SPECLAB_NORMS_HPP
#define SPECLAB_NORMS_HPP

#include <utility>
#include <vector>

#include "speclab/types.hpp"

namespace speclab {

/// Singular values of a square matrix by one-sided cyclic Jacobi, sorted
/// nonincreasing. Convergence: every rotation in a sweep has |sin| <= 1e-14;
/// sweep budget 30.
std::vector<double> singular_values(const DenseMatrix& a);
std::vector<double> singular_values(const TridiagonalMatrix& a);

/// Trace norm: sum of singular values.
double trace_norm(const DenseMatrix& a);
double trace_norm(const TridiagonalMatrix& a);

/// Componentwise l1 norm: sum of entry moduli.
double entrywise_l1(const DenseMatrix& a);
double entrywise_l1(const TridiagonalMatrix& a);

/// Operator (spectral) norm: largest singular value.
double operator_norm(const DenseMatrix& a);
double operator_norm(const TridiagonalMatrix& a);

double frobenius_norm(const DenseMatrix& a);

/// (Re(A), Im(A)) = ((A+A*)/2, (A-A*)/(2i)); both Hermitian, A = Re + i*Im.
std::pair<DenseMatrix, DenseMatrix> hermitian_parts(const DenseMatrix& a);
std::pair<TridiagonalMatrix, TridiagonalMatrix> hermitian_parts(const TridiagonalMatrix& a);

}  // namespace speclab

#endif
