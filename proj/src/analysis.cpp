#include "speclab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "speclab/eig.hpp"
#include "speclab/norms.hpp"

namespace speclab {

// ---------------------------------------------------------------------------
// TestFunction
// ---------------------------------------------------------------------------

TestFunction TestFunction::monomial(int degree) {
    if (degree < 0) throw Error("test function: monomial degree must be nonnegative");
    TestFunction f;
    f.kind_ = Kind::Monomial;
    f.degree_ = degree;
    f.label_ = "z^" + std::to_string(degree);
    return f;
}

TestFunction TestFunction::hat(cxd center, double inner, double outer) {
    if (!(inner >= 0.0) || !(outer > inner))
        throw Error("test function: hat radii must satisfy 0 <= inner < outer");
    TestFunction f;
    f.kind_ = Kind::Hat;
    f.center_ = center;
    f.inner_ = inner;
    f.outer_ = outer;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "hat(%g%+gi;%g,%g)", center.real(), center.imag(), inner,
                  outer);
    f.label_ = buf;
    return f;
}

TestFunction TestFunction::polynomial(std::vector<cxd> coeffs) {
    TestFunction f;
    f.kind_ = Kind::Polynomial;
    f.coeffs_ = std::move(coeffs);
    f.label_ = "poly(deg " + std::to_string(f.coeffs_.empty() ? 0 : f.coeffs_.size() - 1) + ")";
    return f;
}

cxd TestFunction::operator()(cxd z) const {
    switch (kind_) {
        case Kind::Monomial: {
            cxd p = 1.0;
            for (int i = 0; i < degree_; ++i) p *= z;
            return p;
        }
        case Kind::Hat: {
            const double r = std::abs(z - center_);
            if (r <= inner_) return 1.0;
            if (r >= outer_) return 0.0;
            return (outer_ - r) / (outer_ - inner_);
        }
        case Kind::Polynomial: {
            cxd acc = 0.0;
            for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
            return acc;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Means and distribution comparison
// ---------------------------------------------------------------------------

cxd eigen_mean(const Spectrum& spec, const std::function<cxd(cxd)>& f) {
    if (spec.size() == 0) throw Error("eigen_mean: empty spectrum");
    cxd acc = 0.0;
    for (const cxd& z : spec.eigenvalues) acc += f(z);
    return acc / static_cast<double>(spec.size());
}

namespace {

void check_ladder(const std::vector<std::size_t>& ladder) {
    if (ladder.empty()) throw Error("ladder must be nonempty");
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (ladder[i] >= ladder[i + 1]) throw Error("ladder must be strictly increasing");
}

DistributionReport compare_impl(const std::vector<Spectrum>& spectra, const MatrixSymbol& sym,
                                const std::vector<TestFunction>& tests,
                                const std::vector<std::size_t>& ladder, std::size_t quadrature_n,
                                double gap_threshold) {
    DistributionReport rep;
    rep.n_ladder = ladder;
    rep.gap_threshold = gap_threshold;
    for (const TestFunction& f : tests) {
        DistributionReport::PerFunction pf;
        pf.label = f.label();
        pf.symbol_value = symbol_functional(sym, f, quadrature_n);
        for (const Spectrum& s : spectra) {
            const cxd mean = eigen_mean(s, f);
            pf.means.push_back(mean);
            pf.gaps.push_back(std::abs(mean - pf.symbol_value));
        }
        pf.gaps_monotone_decreasing = true;
        for (std::size_t i = 0; i + 1 < pf.gaps.size(); ++i)
            if (pf.gaps[i + 1] > pf.gaps[i]) pf.gaps_monotone_decreasing = false;
        pf.converged =
            pf.gaps.back() <= 0.5 * pf.gaps.front() && pf.gaps.back() < gap_threshold;
        rep.functions.push_back(std::move(pf));
    }
    return rep;
}

}  // namespace

DistributionReport distribution_compare(const CoefficientSequence& seq, const MatrixSymbol& sym,
                                        const std::vector<TestFunction>& tests,
                                        const std::vector<std::size_t>& ladder,
                                        std::size_t quadrature_n, double gap_threshold) {
    check_ladder(ladder);
    std::vector<Spectrum> spectra;
    std::vector<double> norms;
    for (std::size_t n : ladder) {
        TridiagonalMatrix a = jacobi_section(seq, n);
        norms.push_back(operator_norm_estimate(a));
        spectra.push_back(eig_auto(a));
    }
    DistributionReport rep =
        compare_impl(spectra, sym, tests, ladder, quadrature_n, gap_threshold);
    rep.operator_norm_estimates = std::move(norms);
    return rep;
}

DistributionReport distribution_compare(const std::vector<Spectrum>& spectra,
                                        const MatrixSymbol& sym,
                                        const std::vector<TestFunction>& tests,
                                        const std::vector<std::size_t>& ladder,
                                        std::size_t quadrature_n, double gap_threshold) {
    check_ladder(ladder);
    if (spectra.size() != ladder.size())
        throw Error("distribution_compare: one spectrum per rung required");
    return compare_impl(spectra, sym, tests, ladder, quadrature_n, gap_threshold);
}

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

std::size_t cluster_count(const Spectrum& spec, const IntervalUnion& s, double eps) {
    if (!(eps > 0.0)) throw Error("cluster_count: eps must be positive");
    std::size_t q = 0;
    for (const cxd& z : spec.eigenvalues)
        if (s.distance(z) >= eps) ++q;
    return q;
}

ClusterReport build_cluster_report(const std::vector<Spectrum>& spectra,
                                   const std::vector<std::size_t>& ladder,
                                   const IntervalUnion& s, const std::vector<double>& epsilons) {
    check_ladder(ladder);
    if (spectra.size() != ladder.size())
        throw Error("cluster report: one spectrum per rung required");
    ClusterReport rep;
    rep.n_ladder = ladder;
    rep.epsilons = epsilons;
    for (double eps : epsilons) {
        std::vector<std::size_t> row;
        for (const Spectrum& sp : spectra) row.push_back(cluster_count(sp, s, eps));

        // Least-squares fit of q(n) against c*phi(n) for phi in {1, sqrt, n}.
        ClusterReport::Trend tr;
        tr.max_count = *std::max_element(row.begin(), row.end());
        const char* names[3] = {"bounded", "sublinear", "linear"};
        double best = std::numeric_limits<double>::infinity();
        double residuals[3];
        for (int m = 0; m < 3; ++m) {
            double num = 0.0, den = 0.0;
            for (std::size_t r = 0; r < ladder.size(); ++r) {
                const double n = static_cast<double>(ladder[r]);
                const double phi = (m == 0) ? 1.0 : (m == 1 ? std::sqrt(n) : n);
                num += static_cast<double>(row[r]) * phi;
                den += phi * phi;
            }
            const double c = den > 0.0 ? num / den : 0.0;
            double res = 0.0;
            for (std::size_t r = 0; r < ladder.size(); ++r) {
                const double n = static_cast<double>(ladder[r]);
                const double phi = (m == 0) ? 1.0 : (m == 1 ? std::sqrt(n) : n);
                const double diff = static_cast<double>(row[r]) - c * phi;
                res += diff * diff;
            }
            residuals[m] = res;
            if (res < best) {
                best = res;
                tr.classification = names[m];
            }
        }
        tr.residual_bounded = residuals[0];
        tr.residual_sqrt = residuals[1];
        tr.residual_linear = residuals[2];
        rep.counts.push_back(std::move(row));
        rep.trends.push_back(std::move(tr));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Attraction
// ---------------------------------------------------------------------------

std::string AttractionReport::order_label() const {
    if (estimated_order == 0) return "infinite (up to " + std::to_string(j_max) + ")";
    return std::to_string(estimated_order);
}

AttractionReport attraction_profile(const std::vector<Spectrum>& spectra, cxd s,
                                    const std::vector<std::size_t>& ladder, std::size_t j_max) {
    check_ladder(ladder);
    if (spectra.size() != ladder.size())
        throw Error("attraction_profile: one spectrum per rung required");
    if (j_max == 0 || j_max > ladder.front())
        throw Error("attraction_profile: j_max must be in [1, min rung]");

    AttractionReport rep;
    rep.point = s;
    rep.j_max = j_max;
    rep.n_ladder = ladder;
    for (const Spectrum& sp : spectra) {
        std::vector<double> d;
        d.reserve(sp.size());
        for (const cxd& z : sp.eigenvalues) d.push_back(std::abs(z - s));
        std::sort(d.begin(), d.end());
        d.resize(j_max);
        rep.distances.push_back(std::move(d));
    }
    rep.estimated_order = 0;
    for (std::size_t j = 0; j < j_max; ++j) {
        const double first = rep.distances.front()[j];
        const double last = rep.distances.back()[j];
        rep.shrink_factors.push_back(last > 0.0 ? first / last
                                                : std::numeric_limits<double>::infinity());
        if (rep.estimated_order == 0 && first < 2.0 * last)
            rep.estimated_order = static_cast<int>(j + 1);
    }
    return rep;
}

AttractionReport attraction_profile(const CoefficientSequence& seq, cxd s,
                                    const std::vector<std::size_t>& ladder, std::size_t j_max) {
    check_ladder(ladder);
    std::vector<Spectrum> spectra;
    for (std::size_t n : ladder) spectra.push_back(eig_auto(jacobi_section(seq, n)));
    return attraction_profile(spectra, s, ladder, j_max);
}

// ---------------------------------------------------------------------------
// Ky Fan-Mirsky and the outlier bound
// ---------------------------------------------------------------------------

namespace {

// Sort key for the partial-sum checks: primary coordinate descending, other
// coordinate descending as the tie break (then input order, for determinism).
std::vector<double> sorted_parts(const std::vector<cxd>& values, bool take_imag) {
    std::vector<std::pair<double, double>> keyed;
    keyed.reserve(values.size());
    for (const cxd& z : values)
        keyed.emplace_back(take_imag ? z.imag() : z.real(), take_imag ? z.real() : z.imag());
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second > y.second;
    });
    std::vector<double> out;
    out.reserve(keyed.size());
    for (const auto& [p, s] : keyed) out.push_back(p);
    return out;
}

KyFanReport kyfan_impl(const std::vector<cxd>& eig_a, const std::vector<double>& eig_im,
                       const std::vector<double>& eig_re, double scale) {
    KyFanReport rep;
    rep.tolerance = 1e-9 * (1.0 + scale);

    for (int variant = 0; variant < 2; ++variant) {
        const bool imag = variant == 0;
        std::vector<double> lhs = sorted_parts(eig_a, imag);
        std::vector<double> rhs = imag ? eig_im : eig_re;
        std::sort(rhs.begin(), rhs.end(), std::greater<double>());

        double lsum = 0.0, rsum = 0.0, worst = -std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < lhs.size(); ++q) {
            lsum += lhs[q];
            rsum += rhs[q];
            worst = std::max(worst, lsum - rsum);
        }
        const double eq_gap = std::abs(lsum - rsum);
        if (imag) {
            rep.im_violation = worst;
            rep.im_equality_gap = eq_gap;
        } else {
            rep.re_violation = worst;
            rep.re_equality_gap = eq_gap;
        }
    }
    return rep;
}

OutlierBoundReport outlier_impl(const std::vector<cxd>& eig_a, const std::vector<double>& eig_re,
                                double im_trace_norm, double eps, double scale) {
    if (!(eps > 0.0)) throw Error("nonreal_outlier_bound: eps must be positive");
    OutlierBoundReport rep;
    rep.epsilon = eps;
    rep.bound = im_trace_norm / eps;
    rep.c = eig_re.empty() ? 0.0 : *std::min_element(eig_re.begin(), eig_re.end());
    rep.d = eig_re.empty() ? 0.0 : *std::max_element(eig_re.begin(), eig_re.end());

    const IntervalUnion box = IntervalUnion::from_intervals({{rep.c, rep.d}});
    const double conf_tol = 1e-9 * (1.0 + scale);
    rep.confinement_ok = true;
    for (const cxd& z : eig_a) {
        if (std::abs(z.imag()) > eps) ++rep.nonreal_count;
        if (box.distance(z) >= eps) ++rep.box_count;
        if (z.real() < rep.c - conf_tol || z.real() > rep.d + conf_tol) rep.confinement_ok = false;
    }
    rep.nonreal_ok = static_cast<double>(rep.nonreal_count) <= rep.bound + 1e-9;
    rep.box_ok = static_cast<double>(rep.box_count) <= rep.bound + 1e-9;
    return rep;
}

}  // namespace

KyFanReport kyfan_mirsky_check(const TridiagonalMatrix& a) {
    const auto [re, im] = hermitian_parts(a);
    return kyfan_impl(eig_auto(a).eigenvalues, hermitian_eigenvalues(im),
                      hermitian_eigenvalues(re), entrywise_l1(a));
}

KyFanReport kyfan_mirsky_check(const DenseMatrix& a) {
    const auto [re, im] = hermitian_parts(a);
    return kyfan_impl(eig_auto(a).eigenvalues, hermitian_eigenvalues(im),
                      hermitian_eigenvalues(re), entrywise_l1(a));
}

OutlierBoundReport nonreal_outlier_bound(const TridiagonalMatrix& a, double eps) {
    const auto [re, im] = hermitian_parts(a);
    return outlier_impl(eig_auto(a).eigenvalues, hermitian_eigenvalues(re), trace_norm(im), eps,
                        entrywise_l1(a));
}

OutlierBoundReport nonreal_outlier_bound(const DenseMatrix& a, double eps) {
    const auto [re, im] = hermitian_parts(a);
    return outlier_impl(eig_auto(a).eigenvalues, hermitian_eigenvalues(re), trace_norm(im), eps,
                        entrywise_l1(a));
}

// ---------------------------------------------------------------------------
// Recurrence residual
// ---------------------------------------------------------------------------

RecurrenceReport recurrence_residual(const CoefficientSequence& seq, std::size_t n) {
    if (n == 0) throw Error("recurrence_residual: order must be positive");
    const TridiagonalMatrix a = jacobi_section(seq, n);
    const Spectrum spec = eig_auto(a);

    RecurrenceReport rep;
    double max_abs_lambda = 0.0;
    for (const cxd& z : spec.eigenvalues) max_abs_lambda = std::max(max_abs_lambda, std::abs(z));
    rep.threshold = 1e-6 * (1.0 + max_abs_lambda);

    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        const cxd z = spec.eigenvalues[idx];
        // d_j = (z - b_{j-1}) d_{j-1} - a_{j-1} c_{j-1} d_{j-2}, with the
        // differentiated recurrence evaluated jointly and rescaled so the
        // Newton ratio survives for large n.
        cxd d_prev = 0.0, d_cur = 1.0;    // d_{-1}, d_0
        cxd dp_prev = 0.0, dp_cur = 0.0;  // d'_{-1}, d'_0
        for (std::size_t j = 1; j <= n; ++j) {
            const cxd zb = z - a.diag()[j - 1];
            const cxd w = (j >= 2) ? a.sub()[j - 2] * a.super()[j - 2] : cxd(0.0);
            const cxd d_next = zb * d_cur - w * d_prev;
            const cxd dp_next = d_cur + zb * dp_cur - w * dp_prev;
            d_prev = d_cur;
            d_cur = d_next;
            dp_prev = dp_cur;
            dp_cur = dp_next;
            const double m = std::max(std::max(std::abs(d_prev), std::abs(d_cur)),
                                      std::max(std::abs(dp_prev), std::abs(dp_cur)));
            if (m > 1e100) {
                const double inv = 1.0 / m;
                d_prev *= inv;
                d_cur *= inv;
                dp_prev *= inv;
                dp_cur *= inv;
            }
        }
        const double dp_abs = std::abs(dp_cur);
        if (dp_abs < 1e-300 * std::max(1.0, std::abs(d_cur))) {
            rep.degenerate_indices.push_back(idx);
            continue;
        }
        rep.max_residual = std::max(rep.max_residual, std::abs(d_cur / dp_cur));
    }
    return rep;
}

std::vector<double> equal_distribution_gap(const Spectrum& a, const Spectrum& b,
                                           const std::vector<TestFunction>& tests) {
    if (a.size() != b.size()) throw Error("equal_distribution_gap: spectra must share the order");
    std::vector<double> gaps;
    gaps.reserve(tests.size());
    for (const TestFunction& f : tests) gaps.push_back(std::abs(eigen_mean(b, f) - eigen_mean(a, f)));
    return gaps;
}

double operator_norm_estimate(const TridiagonalMatrix& a) {
    const std::size_t n = a.order();
    std::vector<cxd> x(n), y(n);
    // Deterministic start with components along every direction in practice.
    for (std::size_t i = 0; i < n; ++i)
        x[i] = cxd(1.0 + 0.25 * std::sin(static_cast<double>(i) + 1.0),
                   0.25 * std::cos(0.7 * static_cast<double>(i)));

    auto apply = [&](const std::vector<cxd>& in, std::vector<cxd>& out, bool adjoint) {
        for (std::size_t i = 0; i < n; ++i) {
            cxd acc = (adjoint ? std::conj(a.diag()[i]) : a.diag()[i]) * in[i];
            if (i > 0) acc += (adjoint ? std::conj(a.super()[i - 1]) : a.sub()[i - 1]) * in[i - 1];
            if (i + 1 < n) acc += (adjoint ? std::conj(a.sub()[i]) : a.super()[i]) * in[i + 1];
            out[i] = acc;
        }
    };

    auto normalize = [](std::vector<cxd>& v) {
        double norm2 = 0.0;
        for (const cxd& z : v) norm2 += std::norm(z);
        const double norm = std::sqrt(norm2);
        if (norm > 0.0)
            for (cxd& z : v) z /= norm;
        return norm;
    };

    normalize(x);
    double sigma = 0.0;
    for (int it = 0; it < 200; ++it) {
        apply(x, y, false);
        apply(y, x, true);
        const double lambda = normalize(x);  // ~ sigma_max^2 once x settles
        const double next = std::sqrt(lambda);
        if (it > 4 && std::abs(next - sigma) <= 1e-12 * std::max(1.0, sigma)) return next;
        sigma = next;
    }
    return sigma;
}

}  // namespace speclab
