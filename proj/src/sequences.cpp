#include "speclab/sequences.hpp"

#include <cmath>
#include <map>

#include "speclab/symbols.hpp"

namespace speclab {

void PeriodicBackground::validate() const {
    if (k == 0 || a_vec.size() != k || b_vec.size() != k)
        throw Error("background: a_vec and b_vec must have length k >= 1");
    for (double a : a_vec)
        if (!(a > 0.0)) throw Error("background: a entries must be strictly positive");
    for (double b : b_vec)
        if (!std::isfinite(b)) throw Error("background: b entries must be finite");
}

PerturbationRule PerturbationRule::inverse_power(cxd coeff, double power) {
    PerturbationRule r;
    r.kind_ = Kind::InversePower;
    r.coeff_ = coeff;
    r.param_ = power;
    return r;
}

PerturbationRule PerturbationRule::geometric(cxd coeff, double ratio) {
    PerturbationRule r;
    r.kind_ = Kind::Geometric;
    r.coeff_ = coeff;
    r.param_ = ratio;
    return r;
}

PerturbationRule PerturbationRule::finite_list(std::vector<cxd> values) {
    PerturbationRule r;
    r.kind_ = Kind::FiniteList;
    r.values_ = std::move(values);
    return r;
}

PerturbationRule PerturbationRule::periodic_table(std::vector<cxd> values) {
    if (values.empty()) throw Error("perturbation rule: periodic table must be nonempty");
    PerturbationRule r;
    r.kind_ = Kind::PeriodicTable;
    r.values_ = std::move(values);
    return r;
}

cxd PerturbationRule::value(std::int64_t j) const {
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::InversePower:
            return coeff_ * std::pow(static_cast<double>(j) + 1.0, -param_);
        case Kind::Geometric:
            return coeff_ * std::pow(param_, static_cast<double>(j));
        case Kind::FiniteList:
            return (j >= 0 && static_cast<std::size_t>(j) < values_.size())
                       ? values_[static_cast<std::size_t>(j)]
                       : cxd(0.0);
        case Kind::PeriodicTable:
            return values_[static_cast<std::size_t>(j) % values_.size()];
    }
    return 0.0;
}

TridiagonalMatrix free_jacobi(std::size_t n) {
    if (n == 0) throw Error("free_jacobi: order must be positive");
    TridiagonalMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m.sub()[i] = 1.0;
        m.super()[i] = 1.0;
    }
    return m;
}

TridiagonalMatrix jacobi_section(const CoefficientSequence& seq, std::size_t n,
                                 double entry_bound) {
    if (n == 0) throw Error("jacobi_section: order must be positive");
    seq.background.validate();
    TridiagonalMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m.diag()[j] = seq.b(j);
    for (std::size_t j = 1; j < n; ++j) {
        m.sub()[j - 1] = seq.a(j);
        m.super()[j - 1] = seq.c(j);
    }
    for (const cxd& z : m.diag())
        if (std::abs(z) > entry_bound) throw Unbounded("jacobi_section: entry exceeds bound guard");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::abs(m.sub()[i]) > entry_bound || std::abs(m.super()[i]) > entry_bound)
            throw Unbounded("jacobi_section: entry exceeds bound guard");
    return m;
}

TridiagonalMatrix periodic_jacobi(const PeriodicBackground& bg, std::size_t m) {
    if (m == 0) throw Error("periodic_jacobi: order must be positive");
    bg.validate();
    TridiagonalMatrix j(m);
    for (std::size_t i = 0; i < m; ++i) j.diag()[i] = bg.b(i);
    for (std::size_t i = 1; i < m; ++i) {
        j.sub()[i - 1] = bg.a(i);
        j.super()[i - 1] = bg.a(i);
    }
    return j;
}

TridiagonalMatrix perturbation_section(const CoefficientSequence& seq, std::size_t n) {
    if (n == 0) throw Error("perturbation_section: order must be positive");
    TridiagonalMatrix p(n);
    for (std::size_t j = 0; j < n; ++j)
        p.diag()[j] = seq.delta_b.value(static_cast<std::int64_t>(j));
    for (std::size_t j = 1; j < n; ++j) {
        p.sub()[j - 1] = seq.delta_a.value(static_cast<std::int64_t>(j));
        p.super()[j - 1] = seq.delta_c.value(static_cast<std::int64_t>(j));
    }
    return p;
}

DenseMatrix block_toeplitz(const MatrixSymbol& sym, std::size_t n) {
    if (n == 0) throw Error("block_toeplitz: block order must be positive");
    const std::size_t k = sym.block_size();
    DenseMatrix t(k * n, k * n);
    for (const auto& [j, block] : sym.coefficients()) {
        for (std::size_t p = 0; p < n; ++p) {
            const std::int64_t q = static_cast<std::int64_t>(p) - j;
            if (q < 0 || q >= static_cast<std::int64_t>(n)) continue;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    t(p * k + r, static_cast<std::size_t>(q) * k + c) = block(r, c);
        }
    }
    return t;
}

DenseMatrix truncated_block_toeplitz(const MatrixSymbol& sym, std::size_t m) {
    if (m == 0) throw Error("truncated_block_toeplitz: order must be positive");
    const std::size_t k = sym.block_size();
    DenseMatrix t(m, m);
    for (const auto& [j, block] : sym.coefficients()) {
        for (std::size_t r = 0; r < m; ++r) {
            const std::int64_t p = static_cast<std::int64_t>(r / k);
            const std::int64_t q = p - j;
            if (q < 0) continue;
            for (std::size_t ic = 0; ic < k; ++ic) {
                const std::int64_t c = q * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(ic);
                if (c < 0 || c >= static_cast<std::int64_t>(m)) continue;
                t(r, static_cast<std::size_t>(c)) = block(r % k, ic);
            }
        }
    }
    return t;
}

PerturbationDiagnostics perturbation_diagnostics(const CoefficientSequence& seq,
                                                 const std::vector<std::int64_t>& n_ladder) {
    for (std::size_t i = 0; i + 1 < n_ladder.size(); ++i)
        if (n_ladder[i] >= n_ladder[i + 1])
            throw Error("perturbation_diagnostics: ladder must be strictly increasing");
    PerturbationDiagnostics d;
    d.n_ladder = n_ladder;

    double s = 0.0;
    std::int64_t j = 1;
    for (std::int64_t n : n_ladder) {
        for (; j <= n; ++j)
            s += std::abs(seq.delta_a.value(j)) + std::abs(seq.delta_b.value(j)) +
                 std::abs(seq.delta_c.value(j));
        d.partial_sums.push_back(s);
        d.cesaro_ratios.push_back(s / static_cast<double>(n));
    }

    const std::size_t r = d.partial_sums.size();
    if (r < 2) {
        d.verdict_hint = "inconclusive";
        return d;
    }
    const double tail_rate = (d.partial_sums[r - 1] - d.partial_sums[r - 2]) /
                             static_cast<double>(n_ladder[r - 1] - n_ladder[r - 2]);
    bool ratios_decreasing = true, ratios_increasing = true;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        if (d.cesaro_ratios[i + 1] >= d.cesaro_ratios[i]) ratios_decreasing = false;
        if (d.cesaro_ratios[i + 1] <= d.cesaro_ratios[i]) ratios_increasing = false;
    }
    if (tail_rate < 1e-3) {
        d.verdict_hint = "trace-class-consistent";
    } else if (ratios_decreasing && d.cesaro_ratios.front() >= 2.0 * d.cesaro_ratios.back()) {
        d.verdict_hint = "cesaro-consistent";
    } else if (ratios_increasing && d.cesaro_ratios.back() >= 2.0 * d.cesaro_ratios.front()) {
        d.verdict_hint = "inconsistent";
    } else {
        d.verdict_hint = "inconclusive";
    }
    return d;
}

namespace {

const std::map<std::string, std::string>& preset_table() {
    static const std::map<std::string, std::string> table = {
        {"free", "no perturbation: the pure periodic background"},
        {"trace_class_demo",
         "complex perturbation decaying like 1/j^2 (summable entries, bounded trace norm)"},
        {"cesaro_demo",
         "imaginary diagonal perturbation decaying like 1/sqrt(j) (Cesaro null, unbounded sums)"},
        {"compact_demo", "complex perturbation decaying like 1/j (entries vanish, sums grow like log)"},
        {"rank_one_demo", "single nonzero entry at the top-left diagonal position"},
    };
    return table;
}

}  // namespace

CoefficientSequence make_preset(const std::string& name, const PeriodicBackground& bg,
                                double amplitude) {
    bg.validate();
    CoefficientSequence seq;
    seq.background = bg;
    seq.description = name;
    const cxd g(amplitude, 0.0);
    if (name == "free") {
        // all deltas zero
    } else if (name == "trace_class_demo") {
        seq.delta_a = PerturbationRule::inverse_power(g * cxd(0.5, 0.0), 2.0);
        seq.delta_b = PerturbationRule::inverse_power(g * cxd(0.0, 1.0), 2.0);
        seq.delta_c = PerturbationRule::inverse_power(g * cxd(-0.25, 0.25), 2.0);
    } else if (name == "cesaro_demo") {
        seq.delta_b = PerturbationRule::inverse_power(g * cxd(0.0, 1.0), 0.5);
    } else if (name == "compact_demo") {
        seq.delta_a = PerturbationRule::inverse_power(g * cxd(0.3, 0.0), 1.0);
        seq.delta_b = PerturbationRule::inverse_power(g * cxd(0.0, 0.5), 1.0);
        seq.delta_c = PerturbationRule::inverse_power(g * cxd(-0.2, 0.0), 1.0);
    } else if (name == "rank_one_demo") {
        seq.delta_b = PerturbationRule::finite_list({g * cxd(2.0, 1.0)});
    } else {
        throw Error("unknown sequence preset: " + name);
    }
    return seq;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, desc] : preset_table()) names.push_back(name);
    return names;
}

std::string preset_description(const std::string& name) {
    auto it = preset_table().find(name);
    if (it == preset_table().end()) throw Error("unknown sequence preset: " + name);
    return it->second;
}

}  // namespace speclab
