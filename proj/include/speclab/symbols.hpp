#ifndef SPECLAB_SYMBOLS_HPP
#define SPECLAB_SYMBOLS_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "speclab/sequences.hpp"
#include "speclab/types.hpp"

namespace speclab {

/// k x k matrix-valued function on [-pi, pi] held as finitely many Fourier
/// coefficients: theta(t) = sum_j coeff[j] * exp(i j t).
class MatrixSymbol {
public:
    explicit MatrixSymbol(std::size_t k) : k_(k) {
        if (k == 0) throw Error("symbol: block size must be positive");
    }

    std::size_t block_size() const { return k_; }

    void set_coefficient(int j, DenseMatrix m);
    const std::map<int, DenseMatrix>& coefficients() const { return coeffs_; }

    /// Largest |j| with a stored coefficient.
    int bandwidth() const;

    /// True iff coeff[-j] == coeff[j]^* for all j, checked exactly.
    bool hermitian_valued() const;

    /// Fourier synthesis at angle t.
    DenseMatrix evaluate(double t) const;

private:
    std::size_t k_;
    std::map<int, DenseMatrix> coeffs_;
};

/// Ordered union of disjoint closed intervals on the real line.
class IntervalUnion {
public:
    IntervalUnion() = default;

    /// Normalizes: sorts, merges intervals that overlap or sit closer than
    /// gap_tol.
    static IntervalUnion from_intervals(std::vector<std::pair<double, double>> raw,
                                        double gap_tol = 0.0);

    const std::vector<std::pair<double, double>>& intervals() const { return iv_; }
    std::size_t components() const { return iv_.size(); }
    bool empty() const { return iv_.empty(); }

    double min() const;
    double max() const;

    /// Euclidean distance from a complex point to the union: |Im z| above an
    /// interval, otherwise hypot of the horizontal gap and Im z.
    double distance(cxd z) const;

    bool contains(double x) const;

private:
    std::vector<std::pair<double, double>> iv_;
};

/// Symbol of a k-periodic Jacobi background: three nonzero Fourier
/// coefficients; the zeroth is the k x k section of the background and the
/// +-1st carry a_vec[0] in the corner positions.
MatrixSymbol periodic_symbol(const PeriodicBackground& bg);

/// k sampled eigenvalue curves on the uniform grid t_l = -pi + 2*pi*l/N,
/// l = 0..N-1, each sorted ascending per grid point.
std::vector<std::vector<double>> eigenvalue_curves(const MatrixSymbol& sym, std::size_t grid_n);

/// Union over j of [min_t lambda_j, max_t lambda_j] on the grid, merging
/// components separated by less than gap_tol (negative gap_tol means
/// 1e-6 * overall range width). At most k components.
IntervalUnion essential_range(const MatrixSymbol& sym, std::size_t grid_n = 4096,
                              double gap_tol = -1.0);

/// Mean of F over the eigenvalue curves:
/// (1/(k*2*pi)) * sum_j integral F(lambda_j(theta(t))) dt, by the composite
/// trapezoid rule on the periodic grid (exact for trigonometric-polynomial
/// integrands once N exceeds the bandwidth).
cxd symbol_functional(const MatrixSymbol& sym, const std::function<cxd(cxd)>& f,
                      std::size_t quadrature_n = 1024);

/// (1/pi) * integral_{-2}^{2} F(x)/sqrt(4-x^2) dx, integrated in the
/// substituted variable x = 2 cos t to avoid the endpoint singularity.
double arcsine_functional(const std::function<cxd(cxd)>& f, std::size_t quadrature_n = 1024);

/// Trapezoid estimate of the j-th Fourier coefficient of the symbol,
/// exact when N > 2 * bandwidth. Round-trip check helper.
DenseMatrix fourier_coefficient(const MatrixSymbol& sym, int j, std::size_t quadrature_n);

/// Symbol as a list of (j, k x k matrix) coefficient records; complex entries
/// are stored as [re, im] pairs. The report files embed this form.
nlohmann::json symbol_to_json(const MatrixSymbol& sym);
MatrixSymbol symbol_from_json(const nlohmann::json& j);

}  // namespace speclab

#endif
