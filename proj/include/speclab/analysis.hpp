#ifndef SPECLAB_ANALYSIS_HPP
#define SPECLAB_ANALYSIS_HPP

#include <functional>
#include <string>
#include <vector>

#include "speclab/sequences.hpp"
#include "speclab/symbols.hpp"
#include "speclab/types.hpp"

namespace speclab {

/// Continuous test function with bounded support (or a polynomial, for the
/// moment checks): monomial z^q, radial hat bump, or explicit polynomial.
class TestFunction {
public:
    enum class Kind { Monomial, Hat, Polynomial };

    static TestFunction monomial(int degree);
    /// 1 on |z-center| <= inner, 0 on |z-center| >= outer, linear in the
    /// radius in between.
    static TestFunction hat(cxd center, double inner, double outer);
    static TestFunction polynomial(std::vector<cxd> coeffs);  // c0 + c1 z + ...

    cxd operator()(cxd z) const;
    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }

private:
    TestFunction() = default;
    Kind kind_ = Kind::Monomial;
    int degree_ = 0;
    cxd center_{0.0};
    double inner_ = 0.0, outer_ = 1.0;
    std::vector<cxd> coeffs_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct DistributionReport {
    std::vector<std::size_t> n_ladder;
    struct PerFunction {
        std::string label;
        cxd symbol_value;
        std::vector<cxd> means;    // per rung
        std::vector<double> gaps;  // |mean - symbol_value| per rung
        bool gaps_monotone_decreasing = false;
        bool converged = false;  // last gap < 0.5*first gap and < threshold
    };
    std::vector<PerFunction> functions;
    double gap_threshold = 0.0;
    // Operator-norm estimates per rung: the uniform-boundedness hypothesis is
    // logged, never asserted.
    std::vector<double> operator_norm_estimates;
};

struct ClusterReport {
    std::vector<std::size_t> n_ladder;
    std::vector<double> epsilons;
    std::vector<std::vector<std::size_t>> counts;  // counts[e][rung]
    struct Trend {
        std::string classification;  // bounded | sublinear | linear (heuristic)
        double residual_bounded = 0.0;
        double residual_sqrt = 0.0;
        double residual_linear = 0.0;
        std::size_t max_count = 0;
    };
    std::vector<Trend> trends;  // per epsilon
};

struct AttractionReport {
    cxd point;
    std::size_t j_max = 0;
    std::vector<std::size_t> n_ladder;
    std::vector<std::vector<double>> distances;  // per rung: j_max sorted distances
    std::vector<double> shrink_factors;          // per j: first-rung over last-rung distance
    int estimated_order = 0;                     // 0 encodes "infinite (up to j_max)"
    std::string order_label() const;
};

struct KyFanReport {
    double im_violation = 0.0;  // max over q of (partial sum lhs - rhs)
    double re_violation = 0.0;
    double im_equality_gap = 0.0;  // |lhs - rhs| at q = n
    double re_equality_gap = 0.0;
    double tolerance = 0.0;  // 1e-9 * (1 + entrywise_l1)
    bool ok() const {
        return im_violation <= tolerance && re_violation <= tolerance &&
               im_equality_gap <= tolerance && re_equality_gap <= tolerance;
    }
};

struct OutlierBoundReport {
    double epsilon = 0.0;
    std::size_t nonreal_count = 0;  // #{|Im lambda| > eps}
    double bound = 0.0;             // trace_norm(Im A) / eps
    bool nonreal_ok = false;
    double c = 0.0, d = 0.0;     // range of the eigenvalues of Re(A)
    std::size_t box_count = 0;   // #{lambda outside D([c,d], eps)}
    bool box_ok = false;
    bool confinement_ok = false;  // Re(lambda) within [c,d] up to tolerance
    bool ok() const { return nonreal_ok && box_ok && confinement_ok; }
};

struct RecurrenceReport {
    double max_residual = 0.0;  // over eigenvalues with usable derivative
    double threshold = 0.0;     // 1e-6 * (1 + max |lambda|)
    std::vector<std::size_t> degenerate_indices;
    bool ok() const { return max_residual <= threshold; }
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Arithmetic mean of F over the eigenvalues (with multiplicity).
cxd eigen_mean(const Spectrum& spec, const std::function<cxd(cxd)>& f);

/// Per rung and test function, the gap between the finite-section eigenvalue
/// mean and the symbol functional. Spectra are computed with eig_auto.
DistributionReport distribution_compare(const CoefficientSequence& seq, const MatrixSymbol& sym,
                                        const std::vector<TestFunction>& tests,
                                        const std::vector<std::size_t>& n_ladder,
                                        std::size_t quadrature_n = 1024,
                                        double gap_threshold = 0.05);

/// Same comparison over precomputed spectra (no norm estimates).
DistributionReport distribution_compare(const std::vector<Spectrum>& spectra,
                                        const MatrixSymbol& sym,
                                        const std::vector<TestFunction>& tests,
                                        const std::vector<std::size_t>& n_ladder,
                                        std::size_t quadrature_n = 1024,
                                        double gap_threshold = 0.05);

/// Number of eigenvalues at distance >= eps from the interval union.
std::size_t cluster_count(const Spectrum& spec, const IntervalUnion& s, double eps);

/// Outlier counts across a ladder with a least-squares trend fit against
/// c, c*sqrt(n), c*n (heuristic, residuals reported).
ClusterReport build_cluster_report(const std::vector<Spectrum>& spectra,
                                   const std::vector<std::size_t>& n_ladder,
                                   const IntervalUnion& s, const std::vector<double>& epsilons);

/// Distances of the j_max nearest eigenvalues to s per rung; the estimated
/// attraction order is the smallest j whose distance fails to shrink by a
/// factor >= 2 from the first to the last rung (0 when all shrink).
AttractionReport attraction_profile(const CoefficientSequence& seq, cxd s,
                                    const std::vector<std::size_t>& n_ladder, std::size_t j_max);
AttractionReport attraction_profile(const std::vector<Spectrum>& spectra, cxd s,
                                    const std::vector<std::size_t>& n_ladder, std::size_t j_max);

/// Partial-sum inequalities between Im/Re of the eigenvalues of A and the
/// eigenvalues of Im(A)/Re(A), both sorted decreasing; the report carries the
/// largest signed violation and the q = n equality gap.
KyFanReport kyfan_mirsky_check(const TridiagonalMatrix& a);
KyFanReport kyfan_mirsky_check(const DenseMatrix& a);

/// Bound on the number of eigenvalues with |Im| > eps by trace_norm(Im A)/eps,
/// the same bound for eigenvalues outside D([c,d], eps), and the real-part
/// confinement check.
OutlierBoundReport nonreal_outlier_bound(const TridiagonalMatrix& a, double eps);
OutlierBoundReport nonreal_outlier_bound(const DenseMatrix& a, double eps);

/// Newton-normalized characteristic residual max_j |d_n(l_j)/d_n'(l_j)| via
/// the three-term determinant recurrence, evaluated at the computed
/// eigenvalues with joint rescaling against overflow.
RecurrenceReport recurrence_residual(const CoefficientSequence& seq, std::size_t n);

/// Per-test-function |mean_B - mean_A| for two spectra of equal order.
std::vector<double> equal_distribution_gap(const Spectrum& a, const Spectrum& b,
                                           const std::vector<TestFunction>& tests);

/// Power-iteration estimate of the largest singular value of a tridiagonal
/// matrix (deterministic start vector; diagnostic quality, not a guarantee).
double operator_norm_estimate(const TridiagonalMatrix& a);

}  // namespace speclab

#endif
