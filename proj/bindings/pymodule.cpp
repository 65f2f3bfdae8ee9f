#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "speclab/analysis.hpp"
#include "speclab/eig.hpp"
#include "speclab/experiment.hpp"
#include "speclab/normlab.hpp"
#include "speclab/norms.hpp"
#include "speclab/sequences.hpp"
#include "speclab/symbols.hpp"

namespace py = pybind11;
using namespace speclab;

namespace {

using NestedList = std::vector<std::vector<cxd>>;

DenseMatrix to_dense(const NestedList& rows) {
    const std::size_t r = rows.size();
    if (r == 0) throw Error("matrix must be nonempty");
    const std::size_t c = rows.front().size();
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("matrix rows must have equal length");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

NestedList from_dense(const DenseMatrix& m) {
    NestedList rows(m.rows(), std::vector<cxd>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

PeriodicBackground make_background(std::size_t k, const std::vector<double>& a,
                                   const std::vector<double>& b) {
    PeriodicBackground bg{k, a, b};
    bg.validate();
    return bg;
}

TestFunction parse_function(const std::string& spec) {
    // monomial:q or hat:re:im:inner:outer, matching the CLI config syntax
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = spec.find(':', start);
        parts.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts[0] == "monomial" && parts.size() == 2)
        return TestFunction::monomial(std::stoi(parts[1]));
    if (parts[0] == "hat" && parts.size() == 5)
        return TestFunction::hat(cxd(std::stod(parts[1]), std::stod(parts[2])),
                                 std::stod(parts[3]), std::stod(parts[4]));
    throw Error("unknown test function spec: " + spec);
}

}  // namespace

PYBIND11_MODULE(_speclab, m) {
    m.doc() = "finite sections of perturbed Jacobi and block Toeplitz matrices, their spectra, "
              "and the empirical checks built on them";

    py::register_exception<Error>(m, "SpeclabError");

    py::class_<TridiagonalMatrix>(m, "TridiagonalMatrix")
        .def(py::init([](const std::vector<cxd>& sub, const std::vector<cxd>& diag,
                         const std::vector<cxd>& super) {
                 return TridiagonalMatrix(sub, diag, super);
             }),
             py::arg("sub"), py::arg("diag"), py::arg("super"))
        .def_property_readonly("order", &TridiagonalMatrix::order)
        .def_property_readonly("sub",
                               [](const TridiagonalMatrix& t) { return t.sub(); })
        .def_property_readonly("diag",
                               [](const TridiagonalMatrix& t) { return t.diag(); })
        .def_property_readonly("super",
                               [](const TridiagonalMatrix& t) { return t.super(); })
        .def("to_dense", [](const TridiagonalMatrix& t) { return from_dense(t.to_dense()); })
        .def("__repr__", [](const TridiagonalMatrix& t) {
            return "<TridiagonalMatrix order=" + std::to_string(t.order()) + ">";
        });

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def_readonly("max_residual", &Spectrum::max_residual)
        .def_readonly("iterations", &Spectrum::iterations)
        .def("__len__", &Spectrum::size)
        .def("__repr__", [](const Spectrum& s) {
            return "<Spectrum size=" + std::to_string(s.size()) + ">";
        });

    // matrix families
    m.def("free_jacobi", &free_jacobi, py::arg("n"));
    m.def(
        "periodic_jacobi",
        [](std::size_t k, const std::vector<double>& a, const std::vector<double>& b,
           std::size_t order) { return periodic_jacobi(make_background(k, a, b), order); },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("order"));
    m.def(
        "preset_section",
        [](const std::string& preset, std::size_t n, double amplitude, std::size_t k,
           const std::vector<double>& a, const std::vector<double>& b) {
            return jacobi_section(make_preset(preset, make_background(k, a, b), amplitude), n);
        },
        py::arg("preset"), py::arg("n"), py::arg("amplitude") = 1.0, py::arg("k") = 1,
        py::arg("a") = std::vector<double>{1.0}, py::arg("b") = std::vector<double>{0.0});
    m.def(
        "block_toeplitz",
        [](std::size_t k, const std::vector<double>& a, const std::vector<double>& b,
           std::size_t n) { return from_dense(block_toeplitz(periodic_symbol(make_background(k, a, b)), n)); },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "truncated_block_toeplitz",
        [](std::size_t k, const std::vector<double>& a, const std::vector<double>& b,
           std::size_t m_order) {
            return from_dense(truncated_block_toeplitz(periodic_symbol(make_background(k, a, b)), m_order));
        },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("m"));

    // spectra
    m.def("eig_general", py::overload_cast<const TridiagonalMatrix&>(&eig_general), py::arg("a"));
    m.def(
        "eig_general_dense",
        [](const NestedList& rows) { return eig_general(to_dense(rows)); }, py::arg("a"));
    m.def("eig_hermitian", &eig_hermitian, py::arg("a"));
    m.def("eig_auto", py::overload_cast<const TridiagonalMatrix&>(&eig_auto), py::arg("a"));
    m.def(
        "eig_auto_dense", [](const NestedList& rows) { return eig_auto(to_dense(rows)); },
        py::arg("a"));

    // norms
    m.def(
        "singular_values",
        [](const NestedList& rows) { return singular_values(to_dense(rows)); }, py::arg("a"));
    m.def(
        "trace_norm", [](const NestedList& rows) { return trace_norm(to_dense(rows)); },
        py::arg("a"));
    m.def(
        "entrywise_l1", [](const NestedList& rows) { return entrywise_l1(to_dense(rows)); },
        py::arg("a"));
    m.def(
        "operator_norm", [](const NestedList& rows) { return operator_norm(to_dense(rows)); },
        py::arg("a"));
    m.def(
        "hermitian_parts",
        [](const NestedList& rows) {
            const auto [re, im] = hermitian_parts(to_dense(rows));
            return std::make_pair(from_dense(re), from_dense(im));
        },
        py::arg("a"));

    // symbols
    m.def(
        "essential_range",
        [](std::size_t k, const std::vector<double>& a, const std::vector<double>& b,
           std::size_t grid, double gap_tol) {
            return essential_range(periodic_symbol(make_background(k, a, b)), grid, gap_tol)
                .intervals();
        },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("grid") = 4096,
        py::arg("gap_tol") = -1.0);
    m.def(
        "symbol_functional",
        [](std::size_t k, const std::vector<double>& a, const std::vector<double>& b,
           const std::string& fn, std::size_t quadrature) {
            return symbol_functional(periodic_symbol(make_background(k, a, b)),
                                     parse_function(fn), quadrature);
        },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("function"),
        py::arg("quadrature") = 1024);
    m.def(
        "arcsine_functional",
        [](const std::string& fn, std::size_t quadrature) {
            return arcsine_functional(parse_function(fn), quadrature);
        },
        py::arg("function"), py::arg("quadrature") = 1024);

    // analysis
    m.def(
        "eigen_mean",
        [](const Spectrum& s, const std::string& fn) { return eigen_mean(s, parse_function(fn)); },
        py::arg("spectrum"), py::arg("function"));
    m.def(
        "cluster_count",
        [](const Spectrum& s, const std::vector<std::pair<double, double>>& intervals,
           double eps) {
            return cluster_count(s, IntervalUnion::from_intervals(intervals), eps);
        },
        py::arg("spectrum"), py::arg("intervals"), py::arg("eps"));
    m.def(
        "kyfan_mirsky_check",
        [](const TridiagonalMatrix& a) {
            const KyFanReport r = kyfan_mirsky_check(a);
            py::dict d;
            d["im_violation"] = r.im_violation;
            d["re_violation"] = r.re_violation;
            d["im_equality_gap"] = r.im_equality_gap;
            d["re_equality_gap"] = r.re_equality_gap;
            d["tolerance"] = r.tolerance;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("a"));
    m.def(
        "nonreal_outlier_bound",
        [](const TridiagonalMatrix& a, double eps) {
            const OutlierBoundReport r = nonreal_outlier_bound(a, eps);
            py::dict d;
            d["nonreal_count"] = r.nonreal_count;
            d["box_count"] = r.box_count;
            d["bound"] = r.bound;
            d["c"] = r.c;
            d["d"] = r.d;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("a"), py::arg("eps"));
    m.def(
        "recurrence_residual",
        [](const std::string& preset, std::size_t n, double amplitude) {
            const RecurrenceReport r = recurrence_residual(
                make_preset(preset, PeriodicBackground{}, amplitude), n);
            py::dict d;
            d["max_residual"] = r.max_residual;
            d["threshold"] = r.threshold;
            d["degenerate"] = r.degenerate_indices;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("preset"), py::arg("n"), py::arg("amplitude") = 1.0);

    // normlab
    m.def(
        "diagonal_part",
        [](const NestedList& rows, int m_index) {
            return from_dense(diagonal_part(to_dense(rows), m_index));
        },
        py::arg("a"), py::arg("m"));
    m.def(
        "bhatia_average",
        [](const NestedList& rows, int m_index, std::size_t grid) {
            return from_dense(bhatia_average(to_dense(rows), m_index, grid));
        },
        py::arg("a"), py::arg("m"), py::arg("grid"));
    m.def(
        "norm_equivalence_check",
        [](const TridiagonalMatrix& a) {
            const NormEquivalenceReport r = norm_equivalence_check(a);
            py::dict d;
            d["trace_norm"] = r.trace_norm_value;
            d["entrywise"] = r.entrywise_value;
            d["c_struct"] = r.c_struct;
            d["lower_ok"] = r.lower_ok;
            d["upper_ok"] = r.upper_ok;
            return d;
        },
        py::arg("a"));

    // experiment runner
    m.def("list_presets", &list_presets);
    m.def(
        "run_experiment_file",
        [](const std::string& config_path, const std::string& out_dir, long seed) {
            ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
            if (!out_dir.empty()) cfg.output_dir = out_dir;
            if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
            return run_experiment(cfg).exit_code;
        },
        py::arg("config_path"), py::arg("out_dir") = std::string(), py::arg("seed") = -1);
}
