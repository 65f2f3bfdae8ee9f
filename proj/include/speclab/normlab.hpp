#ifndef SPECLAB_NORMLAB_HPP
#define SPECLAB_NORMLAB_HPP

#include "speclab/types.hpp"

namespace speclab {

struct NormEquivalenceReport {
    double trace_norm_value = 0.0;
    double entrywise_value = 0.0;
    int c_struct = 3;  // number of nonzero diagonals of the structure class
    double tolerance = 0.0;
    bool lower_ok = false;  // entrywise >= trace_norm - tol
    bool upper_ok = false;  // entrywise <= c_struct * trace_norm + tol
    // The looser sandwich (1/3)*trace <= entrywise <= 9*trace, meaningful for
    // the tridiagonal structure class only.
    bool loose_checked = false;
    bool loose_lower_ok = true;
    bool loose_upper_ok = true;
    bool ok() const { return lower_ok && upper_ok; }
};

/// The matrix that keeps exactly the m-th diagonal of A (entries with
/// row - col == m) and zeroes everything else.
DenseMatrix diagonal_part(const DenseMatrix& a, int m);

/// (1/N) sum_l D(t_l) A D*(t_l) exp(-i m t_l) on the uniform grid
/// t_l = -pi + 2*pi*l/N, with D(t) = diag(exp(i(j-1)t)). For N >= 2n-1 the
/// discrete average reproduces diagonal_part(a, m) exactly; smaller N throws
/// GridTooCoarse.
DenseMatrix bhatia_average(const DenseMatrix& a, int m, std::size_t grid_n);

/// Sandwich trace_norm <= entrywise_l1 <= c_struct * trace_norm at tolerance
/// 1e-9 * (1 + entrywise).
NormEquivalenceReport norm_equivalence_check(const TridiagonalMatrix& a);
NormEquivalenceReport norm_equivalence_check(const DenseMatrix& a, int c_struct);

/// Number of structurally nonzero diagonals (those with at least one nonzero
/// entry) of a dense matrix.
int nonzero_diagonal_count(const DenseMatrix& a);

}  // namespace speclab

#endif
