#ifndef SPECLAB_SEQUENCES_HPP
#define SPECLAB_SEQUENCES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "speclab/types.hpp"

namespace speclab {

class MatrixSymbol;

/// k-periodic real background: a_vec holds (a_0, ..., a_{k-1}) with a_j > 0,
/// b_vec holds (b_0, ..., b_{k-1}). The realized matrix entries are
/// a_j = a_vec[j mod k] (sub/super coupling rows j and j+1, 1-based j) and
/// b_j = b_vec[j mod k] (diagonal, 0-based j), so the first off-diagonal
/// entry is a_vec[1 mod k] and the coupling across each k-block is a_vec[0].
struct PeriodicBackground {
    std::size_t k = 1;
    std::vector<double> a_vec{1.0};
    std::vector<double> b_vec{0.0};

    double a(std::size_t j) const { return a_vec[j % k]; }
    double b(std::size_t j) const { return b_vec[j % k]; }
    void validate() const;
};

/// Closed-form perturbation rule so experiment configs stay serializable.
class PerturbationRule {
public:
    enum class Kind { Zero, InversePower, Geometric, FiniteList, PeriodicTable };

    PerturbationRule() = default;

    static PerturbationRule zero() { return {}; }
    /// coeff * (j+1)^(-power)
    static PerturbationRule inverse_power(cxd coeff, double power);
    /// coeff * ratio^j, |ratio| < 1
    static PerturbationRule geometric(cxd coeff, double ratio);
    /// values[j] for j < size, 0 beyond
    static PerturbationRule finite_list(std::vector<cxd> values);
    /// values[j mod size]
    static PerturbationRule periodic_table(std::vector<cxd> values);

    cxd value(std::int64_t j) const;
    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }

private:
    Kind kind_ = Kind::Zero;
    cxd coeff_{0.0};
    double param_ = 0.0;
    std::vector<cxd> values_;
};

/// Background plus perturbation: the rule j -> (a_j, b_j, c_j) generating all
/// finite sections. delta_a and delta_c are evaluated at the off-diagonal
/// index j >= 1; delta_b at the diagonal index j >= 0.
struct CoefficientSequence {
    PeriodicBackground background;
    PerturbationRule delta_a, delta_b, delta_c;
    std::string description;

    cxd a(std::size_t j) const { return background.a(j) + delta_a.value(static_cast<std::int64_t>(j)); }
    cxd b(std::size_t j) const { return background.b(j) + delta_b.value(static_cast<std::int64_t>(j)); }
    cxd c(std::size_t j) const { return background.a(j) + delta_c.value(static_cast<std::int64_t>(j)); }

    bool perturbation_is_zero() const {
        return delta_a.is_zero() && delta_b.is_zero() && delta_c.is_zero();
    }
};

struct PerturbationDiagnostics {
    std::vector<std::int64_t> n_ladder;
    std::vector<double> partial_sums;   // S_n, nondecreasing
    std::vector<double> cesaro_ratios;  // S_n / n
    std::string verdict_hint;           // heuristic only
};

/// Free Jacobi matrix: zero diagonal, unit off-diagonals.
TridiagonalMatrix free_jacobi(std::size_t n);

/// n x n section of background + perturbation. Throws Unbounded if any
/// realized entry modulus exceeds entry_bound.
TridiagonalMatrix jacobi_section(const CoefficientSequence& seq, std::size_t n,
                                 double entry_bound = 1e6);

/// m x m section of the k-periodic background (real symmetric).
TridiagonalMatrix periodic_jacobi(const PeriodicBackground& bg, std::size_t m);

/// n x n section of the perturbation alone (the realized P_n).
TridiagonalMatrix perturbation_section(const CoefficientSequence& seq, std::size_t n);

/// Block Toeplitz matrix of block order n (size kn x kn): block (p, q) equals
/// the symbol's Fourier coefficient at p - q.
DenseMatrix block_toeplitz(const MatrixSymbol& sym, std::size_t n);

/// Leading m x m principal block of the infinite block Toeplitz matrix.
DenseMatrix truncated_block_toeplitz(const MatrixSymbol& sym, std::size_t m);

/// Partial sums S_n = sum_{j=1..n} (|da_j|+|db_j|+|dc_j|) along the ladder,
/// Cesaro ratios S_n/n, and a labeled heuristic verdict. The trace-class hint
/// fires when the mean added weight per index over the last ladder stretch,
/// (S_last - S_prev)/(n_last - n_prev), is below 1e-3; the Cesaro hint when
/// S_n/n decreased monotonically by at least a factor 2 across the ladder.
PerturbationDiagnostics perturbation_diagnostics(const CoefficientSequence& seq,
                                                 const std::vector<std::int64_t>& n_ladder);

/// Named perturbation presets over a given background. Known names: "free",
/// "trace_class_demo", "cesaro_demo", "compact_demo", "rank_one_demo".
CoefficientSequence make_preset(const std::string& name, const PeriodicBackground& bg,
                                double amplitude = 1.0);

std::vector<std::string> preset_names();
std::string preset_description(const std::string& name);

}  // namespace speclab

#endif
