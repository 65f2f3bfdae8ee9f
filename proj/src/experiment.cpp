#include "speclab/experiment.hpp"

#include <cmath>
#include <sstream>

#include "speclab/analysis.hpp"
#include "speclab/eig.hpp"
#include "speclab/normlab.hpp"
#include "speclab/norms.hpp"
#include "speclab/parallel.hpp"
#include "speclab/rng.hpp"
#include "speclab/symbols.hpp"

namespace speclab {

namespace {

using nlohmann::json;

json config_echo(const ExperimentConfig& cfg) {
    json j;
    j["kind"] = to_string(cfg.kind);
    j["seed"] = cfg.seed;
    j["preset"] = cfg.preset;
    j["amplitude"] = cfg.amplitude;
    j["background"] = {{"k", cfg.background.k},
                       {"a", cfg.background.a_vec},
                       {"b", cfg.background.b_vec}};
    j["ladder"] = cfg.n_ladder;
    j["epsilons"] = cfg.epsilons;
    j["quadrature"] = cfg.quadrature_n;
    j["gap_threshold"] = cfg.gap_threshold;
    std::vector<std::string> fns;
    for (const TestFunction& f : cfg.test_functions) fns.push_back(f.label());
    j["test_functions"] = fns;
    return j;
}

TridiagonalMatrix random_complex_tridiagonal(Rng& rng, std::size_t n, double radius) {
    TridiagonalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.diag()[i] = rng.complex_in_box(radius);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a.sub()[i] = rng.complex_in_box(radius);
        a.super()[i] = rng.complex_in_box(radius);
    }
    return a;
}

DenseMatrix random_banded(Rng& rng, std::size_t n, int half_bandwidth, double radius) {
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)) <=
                half_bandwidth)
                a(i, j) = rng.complex_in_box(radius);
    return a;
}

/// Spectra for every rung of the ladder, rung-parallel; failures are
/// recorded and leave a hole.
std::vector<Spectrum> ladder_spectra(const CoefficientSequence& seq,
                                     const std::vector<std::size_t>& ladder,
                                     std::vector<std::string>& failures) {
    std::vector<Spectrum> spectra(ladder.size());
    std::vector<std::string> errors(ladder.size());
    parallel_for(ladder.size(), [&](std::size_t r) {
        try {
            spectra[r] = eig_auto(jacobi_section(seq, ladder[r]));
        } catch (const Error& e) {
            errors[r] = std::string("rung n=") + std::to_string(ladder[r]) + ": " + e.what();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) failures.push_back(e);
    return spectra;
}

bool all_rungs_present(const std::vector<Spectrum>& spectra,
                       const std::vector<std::size_t>& ladder) {
    for (std::size_t r = 0; r < spectra.size(); ++r)
        if (spectra[r].size() != ladder[r]) return false;
    return true;
}

// ---------------------------------------------------------------------------

RunResult run_distribution(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "distribution";
    rep.csv_columns = {"n", "function", "mean_re", "mean_im", "symbol_re", "symbol_im", "gap"};

    const CoefficientSequence seq = make_preset(cfg.preset, cfg.background, cfg.amplitude);
    const MatrixSymbol sym = periodic_symbol(cfg.background);
    std::vector<Spectrum> spectra = ladder_spectra(seq, cfg.n_ladder, rep.failures);
    if (!all_rungs_present(spectra, cfg.n_ladder)) {
        rep.checks_passed = false;
        out.exit_code = 2;
        return out;
    }

    const DistributionReport dist = distribution_compare(
        spectra, sym, cfg.test_functions, cfg.n_ladder, cfg.quadrature_n, cfg.gap_threshold);

    std::vector<double> norm_estimates;
    for (std::size_t n : cfg.n_ladder)
        norm_estimates.push_back(operator_norm_estimate(jacobi_section(seq, n)));

    json funcs = json::array();
    for (const auto& pf : dist.functions) {
        json jf;
        jf["function"] = pf.label;
        jf["symbol_value"] = {pf.symbol_value.real(), pf.symbol_value.imag()};
        jf["gaps_monotone_decreasing"] = pf.gaps_monotone_decreasing;
        jf["converged"] = pf.converged;
        funcs.push_back(jf);
        for (std::size_t r = 0; r < cfg.n_ladder.size(); ++r) {
            rep.csv_rows.push_back({std::to_string(cfg.n_ladder[r]), pf.label,
                                    format_double(pf.means[r].real()),
                                    format_double(pf.means[r].imag()),
                                    format_double(pf.symbol_value.real()),
                                    format_double(pf.symbol_value.imag()),
                                    format_double(pf.gaps[r])});
        }
    }
    rep.document["config"] = config_echo(cfg);
    rep.document["symbol"] = symbol_to_json(sym);
    rep.document["functions"] = funcs;
    rep.document["operator_norm_estimates"] = norm_estimates;
    return out;
}

RunResult run_cluster(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "cluster";
    rep.csv_columns = {"n", "epsilon", "outliers"};

    const CoefficientSequence seq = make_preset(cfg.preset, cfg.background, cfg.amplitude);
    const IntervalUnion s = essential_range(periodic_symbol(cfg.background));
    std::vector<Spectrum> spectra = ladder_spectra(seq, cfg.n_ladder, rep.failures);
    if (!all_rungs_present(spectra, cfg.n_ladder)) {
        rep.checks_passed = false;
        out.exit_code = 2;
        return out;
    }

    // epsilon grid sorted ascending for the monotonicity identity
    std::vector<double> eps = cfg.epsilons;
    std::sort(eps.begin(), eps.end());
    const ClusterReport cl = build_cluster_report(spectra, cfg.n_ladder, s, eps);

    for (std::size_t e = 0; e < eps.size(); ++e)
        for (std::size_t r = 0; r < cfg.n_ladder.size(); ++r)
            rep.csv_rows.push_back({std::to_string(cfg.n_ladder[r]), format_double(eps[e]),
                                    std::to_string(cl.counts[e][r])});

    // identity: q_eps is nonincreasing in eps at every rung
    for (std::size_t r = 0; r < cfg.n_ladder.size(); ++r)
        for (std::size_t e = 0; e + 1 < eps.size(); ++e)
            if (cl.counts[e + 1][r] > cl.counts[e][r]) {
                rep.checks_passed = false;
                rep.failures.push_back("outlier count increased with epsilon at n=" +
                                       std::to_string(cfg.n_ladder[r]));
            }

    json trends = json::array();
    for (std::size_t e = 0; e < eps.size(); ++e) {
        json t;
        t["epsilon"] = eps[e];
        t["classification"] = cl.trends[e].classification;
        t["residual_bounded"] = cl.trends[e].residual_bounded;
        t["residual_sqrt"] = cl.trends[e].residual_sqrt;
        t["residual_linear"] = cl.trends[e].residual_linear;
        t["max_count"] = cl.trends[e].max_count;
        trends.push_back(t);
    }
    json interval = json::array();
    for (const auto& [lo, hi] : s.intervals()) interval.push_back({lo, hi});
    rep.document["config"] = config_echo(cfg);
    rep.document["symbol"] = symbol_to_json(periodic_symbol(cfg.background));
    rep.document["essential_range"] = interval;
    rep.document["trends"] = trends;
    if (!rep.checks_passed) out.exit_code = 2;
    return out;
}

RunResult run_attract(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "attract";
    rep.csv_columns = {"point", "n", "j", "distance"};

    const CoefficientSequence seq = make_preset(cfg.preset, cfg.background, cfg.amplitude);
    std::vector<Spectrum> spectra = ladder_spectra(seq, cfg.n_ladder, rep.failures);
    if (!all_rungs_present(spectra, cfg.n_ladder)) {
        rep.checks_passed = false;
        out.exit_code = 2;
        return out;
    }

    json points = json::array();
    for (const cxd& s : cfg.attract_points) {
        const AttractionReport att = attraction_profile(spectra, s, cfg.n_ladder, cfg.j_max);
        json jp;
        jp["point"] = {s.real(), s.imag()};
        jp["estimated_order"] = att.order_label();
        jp["shrink_factors"] = att.shrink_factors;
        points.push_back(jp);
        for (std::size_t r = 0; r < cfg.n_ladder.size(); ++r)
            for (std::size_t j = 0; j < cfg.j_max; ++j)
                rep.csv_rows.push_back({format_complex(s), std::to_string(cfg.n_ladder[r]),
                                        std::to_string(j + 1),
                                        format_double(att.distances[r][j])});
    }
    rep.document["config"] = config_echo(cfg);
    rep.document["points"] = points;
    return out;
}

RunResult run_inequalities(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "inequalities";
    rep.csv_columns = {"check", "instance", "order", "epsilon", "v1", "v2", "v3", "v4", "ok"};

    std::vector<double> eps = cfg.epsilons.empty() ? std::vector<double>{0.1, 0.5} : cfg.epsilons;

    Rng rng(cfg.seed);
    std::vector<TridiagonalMatrix> instances;
    for (std::size_t i = 0; i < cfg.instances; ++i) {
        const std::size_t n = static_cast<std::size_t>(
            rng.uniform_int(static_cast<std::int64_t>(cfg.min_order),
                            static_cast<std::int64_t>(cfg.max_order)));
        instances.push_back(random_complex_tridiagonal(rng, n, 1.0));
    }

    struct Row {
        KyFanReport kyfan;
        std::vector<OutlierBoundReport> outliers;
        std::string error;
    };
    std::vector<Row> rows(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        try {
            rows[i].kyfan = kyfan_mirsky_check(instances[i]);
            for (double e : eps) rows[i].outliers.push_back(nonreal_outlier_bound(instances[i], e));
        } catch (const Error& e) {
            rows[i].error = e.what();
        }
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string order = std::to_string(instances[i].order());
        if (!rows[i].error.empty()) {
            rep.failures.push_back("instance " + std::to_string(i) + ": " + rows[i].error);
            rep.checks_passed = false;
            continue;
        }
        const KyFanReport& kf = rows[i].kyfan;
        if (!kf.ok()) {
            rep.checks_passed = false;
            rep.failures.push_back("kyfan violation at instance " + std::to_string(i));
        }
        rep.csv_rows.push_back({"kyfan", std::to_string(i), order, "",
                                format_double(kf.im_violation), format_double(kf.re_violation),
                                format_double(kf.im_equality_gap),
                                format_double(kf.re_equality_gap), kf.ok() ? "1" : "0"});
        for (const OutlierBoundReport& ob : rows[i].outliers) {
            if (!ob.ok()) {
                rep.checks_passed = false;
                rep.failures.push_back("outlier bound violation at instance " + std::to_string(i));
            }
            rep.csv_rows.push_back({"outlier", std::to_string(i), order,
                                    format_double(ob.epsilon), std::to_string(ob.nonreal_count),
                                    std::to_string(ob.box_count), format_double(ob.bound),
                                    ob.confinement_ok ? "1" : "0", ob.ok() ? "1" : "0"});
        }
    }

    // Recurrence residual on the configured preset at a few orders.
    const CoefficientSequence seq = make_preset(cfg.preset, cfg.background, cfg.amplitude);
    const std::vector<std::size_t> orders =
        cfg.n_ladder.empty() ? std::vector<std::size_t>{16, 64, 256} : cfg.n_ladder;
    for (std::size_t n : orders) {
        try {
            const RecurrenceReport rr = recurrence_residual(seq, n);
            if (!rr.ok()) {
                rep.checks_passed = false;
                rep.failures.push_back("recurrence residual above threshold at n=" +
                                       std::to_string(n));
            }
            rep.csv_rows.push_back({"recurrence", "", std::to_string(n), "",
                                    format_double(rr.max_residual), format_double(rr.threshold),
                                    std::to_string(rr.degenerate_indices.size()), "",
                                    rr.ok() ? "1" : "0"});
        } catch (const Error& e) {
            rep.checks_passed = false;
            rep.failures.push_back(std::string("recurrence at n=") + std::to_string(n) + ": " +
                                   e.what());
        }
    }

    rep.document["config"] = config_echo(cfg);
    rep.document["instance_count"] = cfg.instances;
    if (!rep.checks_passed) out.exit_code = 2;
    return out;
}

RunResult run_norms(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "norms";
    rep.csv_columns = {"check", "instance", "order", "diagonals", "v1", "v2", "v3", "ok"};

    const int half = (cfg.matrix_diagonals - 1) / 2;
    const int c_upper = cfg.c_upper < 0 ? cfg.matrix_diagonals : cfg.c_upper;

    Rng rng(cfg.seed);
    std::vector<DenseMatrix> instances;
    for (std::size_t i = 0; i < cfg.instances; ++i) {
        const std::size_t lo = std::max<std::size_t>(cfg.min_order, half + 1);
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(
            static_cast<std::int64_t>(lo),
            static_cast<std::int64_t>(std::max(lo, cfg.max_order))));
        instances.push_back(random_banded(rng, n, half, 1.0));
    }

    struct Row {
        NormEquivalenceReport sandwich;
        double bhatia_dev = 0.0, bhatia_tol = 0.0;
        bool reconstruct_exact = false;
        std::string error;
    };
    std::vector<Row> rows(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        try {
            const DenseMatrix& a = instances[i];
            const std::size_t n = a.rows();
            rows[i].sandwich = norm_equivalence_check(a, c_upper);

            DenseMatrix sum(n, n);
            for (int m = -(static_cast<int>(n) - 1); m <= static_cast<int>(n) - 1; ++m)
                sum = sum + diagonal_part(a, m);
            rows[i].reconstruct_exact = true;
            for (std::size_t e = 0; e < sum.data().size(); ++e)
                if (sum.data()[e] != a.data()[e]) rows[i].reconstruct_exact = false;

            const std::size_t grid = 2 * n;  // >= 2n-1
            rows[i].bhatia_tol = 1e-12 * entrywise_l1(a);
            for (int m : {0, std::min<int>(half, static_cast<int>(n) - 1)}) {
                const DenseMatrix avg = bhatia_average(a, m, grid);
                const DenseMatrix part = diagonal_part(a, m);
                for (std::size_t e = 0; e < avg.data().size(); ++e)
                    rows[i].bhatia_dev = std::max(rows[i].bhatia_dev,
                                                  std::abs(avg.data()[e] - part.data()[e]));
            }
        } catch (const Error& e) {
            rows[i].error = e.what();
        }
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].error.empty()) {
            rep.failures.push_back("instance " + std::to_string(i) + ": " + rows[i].error);
            rep.checks_passed = false;
            continue;
        }
        const std::string order = std::to_string(instances[i].rows());
        const std::string diags = std::to_string(cfg.matrix_diagonals);
        const NormEquivalenceReport& nr = rows[i].sandwich;
        if (!nr.ok()) {
            rep.checks_passed = false;
            rep.failures.push_back("norm sandwich violated at instance " + std::to_string(i));
        }
        rep.csv_rows.push_back({"sandwich", std::to_string(i), order, diags,
                                format_double(nr.trace_norm_value),
                                format_double(nr.entrywise_value), std::to_string(c_upper),
                                nr.ok() ? "1" : "0"});
        if (!rows[i].reconstruct_exact) {
            rep.checks_passed = false;
            rep.failures.push_back("diagonal reconstruction not exact at instance " +
                                   std::to_string(i));
        }
        rep.csv_rows.push_back({"reconstruct", std::to_string(i), order, diags, "0", "", "",
                                rows[i].reconstruct_exact ? "1" : "0"});
        const bool bh_ok = rows[i].bhatia_dev <= rows[i].bhatia_tol;
        if (!bh_ok) {
            rep.checks_passed = false;
            rep.failures.push_back("diagonal averaging identity failed at instance " +
                                   std::to_string(i));
        }
        rep.csv_rows.push_back({"bhatia", std::to_string(i), order, diags,
                                format_double(rows[i].bhatia_dev),
                                format_double(rows[i].bhatia_tol), "", bh_ok ? "1" : "0"});
    }

    rep.document["config"] = config_echo(cfg);
    rep.document["c_upper"] = c_upper;
    if (!rep.checks_passed) out.exit_code = 2;
    return out;
}

RunResult run_blockcheck(const ExperimentConfig& cfg) {
    RunResult out;
    Report& rep = out.report;
    rep.kind = "blockcheck";
    rep.csv_columns = {"check", "k", "index", "value", "ok"};

    const std::size_t k = cfg.background.k;
    const MatrixSymbol sym = periodic_symbol(cfg.background);
    const std::string ks = std::to_string(k);

    // structural identity: truncations against direct periodic sections
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const DenseMatrix t = truncated_block_toeplitz(sym, m);
        const DenseMatrix j = periodic_jacobi(cfg.background, m).to_dense();
        std::size_t mismatches = 0;
        for (std::size_t e = 0; e < t.data().size(); ++e)
            if (t.data()[e] != j.data()[e]) ++mismatches;
        if (mismatches > 0) {
            rep.checks_passed = false;
            rep.failures.push_back("truncation identity failed at m=" + std::to_string(m));
        }
        rep.csv_rows.push_back({"identity", ks, std::to_string(m), std::to_string(mismatches),
                                mismatches == 0 ? "1" : "0"});
    }

    const IntervalUnion s = essential_range(sym);
    const bool comp_ok = s.components() <= k;
    if (!comp_ok) {
        rep.checks_passed = false;
        rep.failures.push_back("essential range has more components than the block size");
    }
    rep.csv_rows.push_back(
        {"components", ks, "0", std::to_string(s.components()), comp_ok ? "1" : "0"});

    const std::vector<std::size_t> orders =
        cfg.n_ladder.empty() ? std::vector<std::size_t>{120, 480, 960} : cfg.n_ladder;
    for (std::size_t n : orders) {
        try {
            const Spectrum sp = eig_hermitian(periodic_jacobi(cfg.background, n));
            const std::size_t q = cluster_count(sp, s, cfg.block_epsilon);
            const bool ok = q <= 2 * k;
            if (!ok) {
                rep.checks_passed = false;
                rep.failures.push_back("more than 2k outliers at n=" + std::to_string(n));
            }
            rep.csv_rows.push_back({"outliers", ks, std::to_string(n), std::to_string(q),
                                    ok ? "1" : "0"});
        } catch (const Error& e) {
            rep.checks_passed = false;
            rep.failures.push_back(std::string("outlier count at n=") + std::to_string(n) + ": " +
                                   e.what());
        }
    }

    json interval = json::array();
    for (const auto& [lo, hi] : s.intervals()) interval.push_back({lo, hi});
    rep.document["config"] = config_echo(cfg);
    rep.document["symbol"] = symbol_to_json(sym);
    rep.document["essential_range"] = interval;
    if (!rep.checks_passed) out.exit_code = 2;
    return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    RunResult out;
    switch (cfg.kind) {
        case ExperimentKind::Distribution: out = run_distribution(cfg); break;
        case ExperimentKind::Cluster: out = run_cluster(cfg); break;
        case ExperimentKind::Attract: out = run_attract(cfg); break;
        case ExperimentKind::Inequalities: out = run_inequalities(cfg); break;
        case ExperimentKind::Norms: out = run_norms(cfg); break;
        case ExperimentKind::BlockCheck: out = run_blockcheck(cfg); break;
    }
    write_report_files(out.report, cfg.output_dir);
    return out;
}

std::string list_presets() {
    std::ostringstream os;
    os << "sequence presets (combine with any [background]; amplitude scales the rules):\n";
    for (const std::string& name : preset_names())
        os << "  " << name << "\n      " << preset_description(name) << "\n";
    os << "\nexperiment kinds:\n"
       << "  attract       nearest-eigenvalue distances to chosen points across the ladder\n"
       << "                ([attract] points, j_max; [ladder] n)\n"
       << "  blockcheck    truncated block Toeplitz vs periodic section identity, component\n"
       << "                and outlier counts ([blockcheck] max_m, epsilon)\n"
       << "  cluster       outlier counts off the symbol range per (n, epsilon)\n"
       << "                ([epsilons] values; [ladder] n)\n"
       << "  distribution  eigenvalue means vs symbol functionals per test function\n"
       << "                ([tests] functions; [ladder] n)\n"
       << "  inequalities  partial-sum eigenvalue inequalities, nonreal-outlier bounds and\n"
       << "                recurrence residuals on seeded instances ([random] instances)\n"
       << "  norms         trace-norm vs entrywise-norm sandwich, diagonal decomposition and\n"
       << "                averaging identities on seeded banded instances ([norms] diagonals,\n"
       << "                c_upper; [random] instances)\n"
       << "\ncommon sections: [experiment] kind, seed, output, quadrature, gap_threshold;\n"
       << "[background] k, a, b; [sequence] preset, amplitude.\n"
       << "test function specs: monomial:q | hat:center_re:center_im:inner:outer\n";
    return os.str();
}

}  // namespace speclab
