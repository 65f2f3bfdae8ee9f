#include "speclab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "speclab/eig.hpp"

namespace speclab {

namespace {
constexpr double kPi = std::numbers::pi;
}

void MatrixSymbol::set_coefficient(int j, DenseMatrix m) {
    if (m.rows() != k_ || m.cols() != k_)
        throw Error("symbol: coefficient block must be k x k");
    if (!m.all_finite()) throw Error("symbol: non-finite coefficient");
    coeffs_[j] = std::move(m);
}

int MatrixSymbol::bandwidth() const {
    int b = 0;
    for (const auto& [j, m] : coeffs_) b = std::max(b, std::abs(j));
    return b;
}

bool MatrixSymbol::hermitian_valued() const {
    for (const auto& [j, m] : coeffs_) {
        auto it = coeffs_.find(-j);
        if (it == coeffs_.end()) {
            // missing partner: only acceptable if m is exactly zero
            for (const cxd& z : m.data())
                if (z != cxd(0.0)) return false;
            continue;
        }
        const DenseMatrix& partner = it->second;
        for (std::size_t r = 0; r < k_; ++r)
            for (std::size_t c = 0; c < k_; ++c)
                if (partner(r, c) != std::conj(m(c, r))) return false;
    }
    return true;
}

DenseMatrix MatrixSymbol::evaluate(double t) const {
    DenseMatrix v(k_, k_);
    for (const auto& [j, m] : coeffs_) {
        const cxd phase = std::polar(1.0, j * t);
        for (std::size_t i = 0; i < v.data().size(); ++i) v.data()[i] += phase * m.data()[i];
    }
    return v;
}

IntervalUnion IntervalUnion::from_intervals(std::vector<std::pair<double, double>> raw,
                                            double gap_tol) {
    IntervalUnion u;
    if (raw.empty()) return u;
    for (auto& [lo, hi] : raw) {
        if (!(lo <= hi)) throw Error("interval union: lo must not exceed hi");
    }
    std::sort(raw.begin(), raw.end());
    u.iv_.push_back(raw.front());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        auto& last = u.iv_.back();
        if (raw[i].first <= last.second + gap_tol) {
            last.second = std::max(last.second, raw[i].second);
        } else {
            u.iv_.push_back(raw[i]);
        }
    }
    return u;
}

double IntervalUnion::min() const {
    if (iv_.empty()) throw Error("interval union: empty");
    return iv_.front().first;
}

double IntervalUnion::max() const {
    if (iv_.empty()) throw Error("interval union: empty");
    return iv_.back().second;
}

double IntervalUnion::distance(cxd z) const {
    if (iv_.empty()) throw Error("interval union: empty");
    const double x = z.real(), y = z.imag();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [lo, hi] : iv_) {
        double d;
        if (x >= lo && x <= hi) {
            d = std::abs(y);
        } else {
            const double gap = (x < lo) ? lo - x : x - hi;
            d = std::hypot(gap, y);
        }
        best = std::min(best, d);
    }
    return best;
}

bool IntervalUnion::contains(double x) const {
    for (const auto& [lo, hi] : iv_)
        if (x >= lo && x <= hi) return true;
    return false;
}

MatrixSymbol periodic_symbol(const PeriodicBackground& bg) {
    bg.validate();
    const std::size_t k = bg.k;
    MatrixSymbol sym(k);

    TridiagonalMatrix blk = periodic_jacobi(bg, k);
    sym.set_coefficient(0, blk.to_dense());

    DenseMatrix up(k, k), down(k, k);
    up(0, k - 1) = bg.a_vec[0];    // coefficient of exp(+it): top-right corner
    down(k - 1, 0) = bg.a_vec[0];  // coefficient of exp(-it): bottom-left corner
    sym.set_coefficient(1, up);
    sym.set_coefficient(-1, down);
    return sym;
}

std::vector<std::vector<double>> eigenvalue_curves(const MatrixSymbol& sym, std::size_t grid_n) {
    if (grid_n < 2) throw Error("eigenvalue_curves: grid size must be at least 2");
    if (!sym.hermitian_valued())
        throw NotHermitianSymbol("eigenvalue_curves: symbol is not Hermitian-valued");
    const std::size_t k = sym.block_size();
    std::vector<std::vector<double>> curves(k, std::vector<double>(grid_n));
    for (std::size_t l = 0; l < grid_n; ++l) {
        const double t = -kPi + 2.0 * kPi * static_cast<double>(l) / static_cast<double>(grid_n);
        DenseMatrix v = sym.evaluate(t);
        std::vector<double> ev;
        if (k == 1) {
            ev = {v(0, 0).real()};
        } else {
            ev = hermitian_eigenvalues(v);  // ascending
        }
        for (std::size_t j = 0; j < k; ++j) curves[j][l] = ev[j];
    }
    return curves;
}

IntervalUnion essential_range(const MatrixSymbol& sym, std::size_t grid_n, double gap_tol) {
    if (grid_n < 64) throw Error("essential_range: grid size must be at least 64");
    const auto curves = eigenvalue_curves(sym, grid_n);
    std::vector<std::pair<double, double>> ranges;
    double glo = std::numeric_limits<double>::infinity();
    double ghi = -glo;
    for (const auto& c : curves) {
        const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
        ranges.emplace_back(*lo, *hi);
        glo = std::min(glo, *lo);
        ghi = std::max(ghi, *hi);
    }
    if (gap_tol < 0.0) gap_tol = 1e-6 * (ghi - glo);
    return IntervalUnion::from_intervals(std::move(ranges), gap_tol);
}

cxd symbol_functional(const MatrixSymbol& sym, const std::function<cxd(cxd)>& f,
                      std::size_t quadrature_n) {
    if (quadrature_n < 2) throw Error("symbol_functional: quadrature size must be at least 2");
    if (!sym.hermitian_valued())
        throw NotHermitianSymbol("symbol_functional: symbol is not Hermitian-valued");
    const std::size_t k = sym.block_size();
    cxd acc = 0.0;
    for (std::size_t l = 0; l < quadrature_n; ++l) {
        const double t =
            -kPi + 2.0 * kPi * static_cast<double>(l) / static_cast<double>(quadrature_n);
        if (k == 1) {
            acc += f(sym.evaluate(t)(0, 0).real());
        } else {
            for (double ev : hermitian_eigenvalues(sym.evaluate(t))) acc += f(ev);
        }
    }
    return acc / static_cast<double>(k * quadrature_n);
}

double arcsine_functional(const std::function<cxd(cxd)>& f, std::size_t quadrature_n) {
    if (quadrature_n < 2) throw Error("arcsine_functional: quadrature size must be at least 2");
    cxd acc = 0.0;
    for (std::size_t l = 0; l < quadrature_n; ++l) {
        const double t =
            -kPi + 2.0 * kPi * static_cast<double>(l) / static_cast<double>(quadrature_n);
        acc += f(2.0 * std::cos(t));
    }
    return (acc / static_cast<double>(quadrature_n)).real();
}

nlohmann::json symbol_to_json(const MatrixSymbol& sym) {
    nlohmann::json out;
    out["k"] = sym.block_size();
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [j, block] : sym.coefficients()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < sym.block_size(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < sym.block_size(); ++c)
                row.push_back({block(r, c).real(), block(r, c).imag()});
            rows.push_back(row);
        }
        records.push_back({{"j", j}, {"matrix", rows}});
    }
    out["coefficients"] = records;
    return out;
}

MatrixSymbol symbol_from_json(const nlohmann::json& j) {
    if (!j.contains("k") || !j.contains("coefficients"))
        throw Error("symbol json: needs 'k' and 'coefficients'");
    MatrixSymbol sym(j.at("k").get<std::size_t>());
    const std::size_t k = sym.block_size();
    for (const auto& rec : j.at("coefficients")) {
        DenseMatrix block(k, k);
        const auto& rows = rec.at("matrix");
        if (rows.size() != k) throw Error("symbol json: matrix must be k x k");
        for (std::size_t r = 0; r < k; ++r) {
            if (rows[r].size() != k) throw Error("symbol json: matrix must be k x k");
            for (std::size_t c = 0; c < k; ++c)
                block(r, c) = cxd(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
        }
        sym.set_coefficient(rec.at("j").get<int>(), std::move(block));
    }
    return sym;
}

DenseMatrix fourier_coefficient(const MatrixSymbol& sym, int j, std::size_t quadrature_n) {
    const std::size_t k = sym.block_size();
    DenseMatrix acc(k, k);
    for (std::size_t l = 0; l < quadrature_n; ++l) {
        const double t =
            -kPi + 2.0 * kPi * static_cast<double>(l) / static_cast<double>(quadrature_n);
        const cxd phase = std::polar(1.0, -j * t);
        DenseMatrix v = sym.evaluate(t);
        for (std::size_t i = 0; i < acc.data().size(); ++i) acc.data()[i] += phase * v.data()[i];
    }
    for (cxd& z : acc.data()) z /= static_cast<double>(quadrature_n);
    return acc;
}

}  // namespace speclab
